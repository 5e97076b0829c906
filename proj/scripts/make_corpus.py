#!/usr/bin/env python3
"""Regenerates data/corpus.txt, the corpus bundled for the bound-verification suite.

The corpus is synthetic English-like prose: common words drawn with a Zipf-ish
weighting, sentence and paragraph structure, deterministic seed. Running this
script again reproduces the file byte for byte.
"""

import random
import textwrap
from pathlib import Path

TARGET_BYTES = 1_100_000
SEED = 20250819

WORDS = """
the of and to in is was he for it with as his on be at by had not are but from
or have an they which one you were all her she there would their we him been has
when who will no more if out so up said what its about than into them can only
other time new some could these two may first then do any like my now over such
our man me even most made after also did many off before must well back through
years where much your way down should because each just those people too mr how
little state good very make world still see own men work long here get both
between life being under never day same another know while last might us great
old year come since against go came right used take three states himself few
house use during without again place american around however home small found
mrs thought went say part once general high upon school every don does got
united left number course war until always away something fact though water less
public put think almost hand enough far took head yet government system better
set told nothing night end why called didn eyes find going look asked later
knew point next city business give group toward young let days true room
president side social given present several order national second possible
rather per face among form important often things looked early white case
become large need big four within felt along children saw best church ever
least power development light thing family interest want members mind country
area others although turned done open god service problem certain kind began
different door thus help means sense whole matter perhaps itself times human
line above name example action company hands local show five whether gave
today either act feet across quite taken anything seen having death week field
car word experience really moment free necessary value four percent stood
short society question keep behind himself special mother reason body music
play provide sure cost court political air force held money plan change
history simple study soon ground seemed modern real program available
result level process data table note paper method model figure section report
energy surface rate per unit test phase space term theory basis effect type
common low half required points areas instead making clear move road increase
kept french nature private written alone land although position control total
western tried hours stage gone outside else idea enough brought close leave
wife economic person girl late million past support voice strong age various
read deep sound black red long live island story usually six third paid
party office run building current further major cut military bad expected
ready trying paper conditions particular lord feel remember kind st girls
certainly basic considered getting situation account women fire couldn
cannot miss committee picture difficult ago words whose province step club
hope game seems fine future evidence heard hour lay married waiting serious
provided mouth piece length boys rest cent literature centre difference
language complete wall understand education yes river navy region return
moreover summer training army tax determined material trade groups doctor
news share earth single break food floor added attention view needed
purpose letter cold distance nice square direct degree poor student
population science class straight town wrong involved period natural
""".split()

WORDS = [w for w in WORDS if w.isascii() and w.isalpha()]


def main() -> None:
    rng = random.Random(SEED)
    weights = [1.0 / (i + 3) for i in range(len(WORDS))]

    paragraphs = []
    size = 0
    while size < TARGET_BYTES:
        sentences = []
        for _ in range(rng.randint(4, 9)):
            n_words = rng.randint(5, 14)
            ws = rng.choices(WORDS, weights=weights, k=n_words)
            if n_words >= 8 and rng.random() < 0.4:
                ws[rng.randint(2, n_words - 3)] += ","
            sentence = " ".join(ws)
            sentence = sentence[0].upper() + sentence[1:]
            sentence += rng.choices([".", ".", ".", ".", "?", "!"])[0]
            sentences.append(sentence)
        para = textwrap.fill(" ".join(sentences), width=72)
        paragraphs.append(para)
        size += len(para) + 2

    text = "\n\n".join(paragraphs) + "\n"
    out = Path(__file__).resolve().parent.parent / "data" / "corpus.txt"
    out.write_bytes(text.encode("ascii"))
    print(f"wrote {out} ({out.stat().st_size} bytes)")


if __name__ == "__main__":
    main()
