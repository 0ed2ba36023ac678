"""Published triangle presentation tables, kept as byte-exact reference text."""

from __future__ import annotations

import re

from .tripres import TrianglePresentation

# Five reference tables.  Tables 1 and 2 live on Z/21 (labels 0..20), table 3
# on Z/7 (labels 0..6), tables 4 and 5 on an abstract 12-set (labels 1..12).
# The text is exactly what format_table emits for the presentation.

TABLE_TEXTS = {
    1: (
        "(0,7,14) (0,9,3) (0,14,7) (0,15,12) (0,18,6)\n"
        "(1,8,15) (1,10,4) (1,15,8) (1,16,13) (1,19,7)\n"
        "(2,9,16) (2,11,5) (2,16,9) (2,17,14) (2,20,8)\n"
        "(3,0,9) (3,10,17) (3,12,6) (3,17,10) (3,18,15)\n"
        "(4,1,10) (4,11,18) (4,13,7) (4,18,11) (4,19,16)\n"
        "(5,2,11) (5,12,19) (5,14,8) (5,19,12) (5,20,17)\n"
        "(6,0,18) (6,3,12) (6,13,20) (6,15,9) (6,20,13)\n"
        "(7,0,14) (7,1,19) (7,4,13) (7,14,0) (7,16,10)\n"
        "(8,1,15) (8,2,20) (8,5,14) (8,15,1) (8,17,11)\n"
        "(9,2,16) (9,3,0) (9,6,15) (9,16,2) (9,18,12)\n"
        "(10,3,17) (10,4,1) (10,7,16) (10,17,3) (10,19,13)\n"
        "(11,4,18) (11,5,2) (11,8,17) (11,18,4) (11,20,14)\n"
        "(12,0,15) (12,5,19) (12,6,3) (12,9,18) (12,19,5)\n"
        "(13,1,16) (13,6,20) (13,7,4) (13,10,19) (13,20,6)\n"
        "(14,0,7) (14,2,17) (14,7,0) (14,8,5) (14,11,20)\n"
        "(15,1,8) (15,3,18) (15,8,1) (15,9,6) (15,12,0)\n"
        "(16,2,9) (16,4,19) (16,9,2) (16,10,7) (16,13,1)\n"
        "(17,3,10) (17,5,20) (17,10,3) (17,11,8) (17,14,2)\n"
        "(18,4,11) (18,6,0) (18,11,4) (18,12,9) (18,15,3)\n"
        "(19,5,12) (19,7,1) (19,12,5) (19,13,10) (19,16,4)\n"
        "(20,6,13) (20,8,2) (20,13,6) (20,14,11) (20,17,5)\n"
    ),
    2: (
        "(0,7,14) (0,9,3) (0,14,7) (0,15,12) (0,18,6)\n"
        "(1,8,15) (1,10,4) (1,15,8) (1,16,13) (1,19,7)\n"
        "(2,9,16) (2,11,8) (2,16,9) (2,17,5) (2,20,14)\n"
        "(3,0,9) (3,10,17) (3,12,6) (3,17,10) (3,18,15)\n"
        "(4,1,10) (4,11,18) (4,13,7) (4,18,11) (4,19,16)\n"
        "(5,2,17) (5,12,19) (5,14,11) (5,19,12) (5,20,8)\n"
        "(6,0,18) (6,3,12) (6,13,20) (6,15,9) (6,20,13)\n"
        "(7,0,14) (7,1,19) (7,4,13) (7,14,0) (7,16,10)\n"
        "(8,1,15) (8,2,11) (8,5,20) (8,15,1) (8,17,14)\n"
        "(9,2,16) (9,3,0) (9,6,15) (9,16,2) (9,18,12)\n"
        "(10,3,17) (10,4,1) (10,7,16) (10,17,3) (10,19,13)\n"
        "(11,4,18) (11,5,14) (11,8,2) (11,18,4) (11,20,17)\n"
        "(12,0,15) (12,5,19) (12,6,3) (12,9,18) (12,19,5)\n"
        "(13,1,16) (13,6,20) (13,7,4) (13,10,19) (13,20,6)\n"
        "(14,0,7) (14,2,20) (14,7,0) (14,8,17) (14,11,5)\n"
        "(15,1,8) (15,3,18) (15,8,1) (15,9,6) (15,12,0)\n"
        "(16,2,9) (16,4,19) (16,9,2) (16,10,7) (16,13,1)\n"
        "(17,3,10) (17,5,2) (17,10,3) (17,11,20) (17,14,8)\n"
        "(18,4,11) (18,6,0) (18,11,4) (18,12,9) (18,15,3)\n"
        "(19,5,12) (19,7,1) (19,12,5) (19,13,10) (19,16,4)\n"
        "(20,6,13) (20,8,5) (20,13,6) (20,14,2) (20,17,11)\n"
    ),
    3: (
        "(0,1,3) (0,2,6) (0,4,5)\n"
        "(1,2,4) (1,3,0) (1,5,6)\n"
        "(2,3,5) (2,4,1) (2,6,0)\n"
        "(3,0,1) (3,4,6) (3,5,2)\n"
        "(4,1,2) (4,5,0) (4,6,3)\n"
        "(5,0,4) (5,2,3) (5,6,1)\n"
        "(6,0,2) (6,1,5) (6,3,4)\n"
    ),
    4: (
        "(1,2,4) (1,5,9) (1,6,5)\n"
        "(2,3,12) (2,4,1) (2,5,4)\n"
        "(3,4,12) (3,7,11) (3,12,2)\n"
        "(4,1,2) (4,2,5) (4,12,3)\n"
        "(5,1,6) (5,4,2) (5,9,1)\n"
        "(6,5,1) (6,8,9) (6,9,10)\n"
        "(7,8,10) (7,11,3) (7,12,11)\n"
        "(8,9,6) (8,10,7) (8,11,10)\n"
        "(9,1,5) (9,6,8) (9,10,6)\n"
        "(10,6,9) (10,7,8) (10,8,11)\n"
        "(11,3,7) (11,7,12) (11,10,8)\n"
        "(12,2,3) (12,3,4) (12,11,7)\n"
    ),
    5: (
        "(1,1,1) (1,10,6) (1,12,2)\n"
        "(2,1,12) (2,2,2) (2,3,11)\n"
        "(3,3,3) (3,4,5) (3,11,2)\n"
        "(4,4,4) (4,5,3) (4,12,7)\n"
        "(5,3,4) (5,5,5) (5,8,9)\n"
        "(6,1,10) (6,6,6) (6,8,7)\n"
        "(7,4,12) (7,6,8) (7,7,7)\n"
        "(8,7,6) (8,8,8) (8,9,5)\n"
        "(9,5,8) (9,9,9) (9,10,11)\n"
        "(10,6,1) (10,10,10) (10,11,9)\n"
        "(11,2,3) (11,9,10) (11,11,11)\n"
        "(12,2,1) (12,7,4) (12,12,12)\n"
    ),
}

# First label of the index set each table lives on.
TABLE_STARTS = {1: 0, 2: 0, 3: 0, 4: 1, 5: 1}

_TRIPLE_RE = re.compile(r"\((-?\d+),(-?\d+),(-?\d+)\)")


def parse_table(text, start=0):
    """Parse emitted table text back into a TrianglePresentation."""
    triples = frozenset(
        (int(a), int(b), int(c)) for a, b, c in _TRIPLE_RE.findall(text)
    )
    if not triples:
        raise ValueError("no triples found in table text")
    hi = max(max(t) for t in triples)
    labels = tuple(range(start, hi + 1))
    return TrianglePresentation(labels, triples)


def table(which):
    """Return reference table 1..5 as a TrianglePresentation."""
    return parse_table(TABLE_TEXTS[which], TABLE_STARTS[which])


# Findings about the Nauru-link groups obtained with external computer
# algebra systems; recorded for context, never recomputed here.  Words are
# generator index pairs, so (5, 1) means a5*a1.
NAURU_FINDINGS = {
    4: {"group": "hyperbolic"},
    5: {"group": "contains Z^2", "commuting_words": ((5, 1), (10, 4))},
}
