CONSTRUCTIONS = (
    "chain", "tree", "bowtie", "grid", "bconstruction", "theorem12", "planar",
    "monoid", "stern", "sfamily", "product-of",
)

# конструкции, где --depth означает максимальную длину слова (рангов на один больше)
WORD_CONSTRUCTIONS = ("monoid", "stern", "sfamily")

FORMATS = ("json", "dot", "series", "schur")

DESCRIPTION = (
    "Build finite truncations of upho posets and check their properties exactly."
)

CONSTRUCT_HELP = (
    "chain/tree/bowtie: --depth [--k]; grid: --a 1,2; bconstruction: --a --b; "
    "theorem12: --a 1 --b 2,3; planar: --b 3 --a2 1 --a3 1; "
    "monoid: --relations FILE; stern; sfamily: --indices 2,3; "
    "product-of: --left FILE --right FILE. For word constructions --depth is the "
    "maximal word length."
)

SUBSETS_HELP = "index sets separated by ';', e.g. \"∅;2;3;2,3\""

PASS = "PASS"
FAIL = "FAIL"
MATCH = "MATCH"
MISMATCH = "MISMATCH"
