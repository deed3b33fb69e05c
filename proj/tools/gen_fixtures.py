#!/usr/bin/env python3
"""Regenerates the JSON fixtures under fixtures/ from the tables below."""
import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "fixtures")


def cells_from_rows(rows):
    """rows: list of (row, colLo, colHi), bottom row = 1."""
    out = []
    for r, lo, hi in rows:
        for c in range(lo, hi + 1):
            out.append([r, c])
    return sorted(out)


def write(name, obj):
    with open(os.path.join(OUT, name), "w") as f:
        json.dump(obj, f, indent=1, sort_keys=True)
        f.write("\n")


os.makedirs(OUT, exist_ok=True)

write("insertion_worked_examples.json", {
    "id": "insertion-worked-examples",
    "notes": "hand-worked single-letter insertions into a 4-row tableau; "
             "one bumping pass that leaves the shape fixed and one that "
             "grows it by a box",
    "tableau": [[1, 2, 4, 6], [3, 4], [5, 7], [6]],
    "cases": [
        {"letter": 2, "result": [[1, 2, 4, 6], [3, 4], [5, 7], [6]],
         "corner": [3, 2], "alpha": 0},
        {"letter": 5, "result": [[1, 2, 4, 5], [3, 4, 6], [5, 7], [6]],
         "corner": [2, 3], "alpha": 1},
    ],
})

write("word_pq_32412143.json", {
    "id": "word-pq-32412143",
    "notes": "insertion and recording tableau of an 8-letter word; "
             "reading word of P is 324123",
    "word": [3, 2, 4, 1, 2, 1, 4, 3],
    "P": [[1, 2, 3], [2, 4], [3]],
    "Q": [[[1], [3], [7]], [[2], [5, 8]], [[4, 6]]],
    "reading_word": [3, 2, 4, 1, 2, 3],
    "lis": 3,
    "lds": 3,
})

write("word_pq_213312.json", {
    "id": "word-pq-213312",
    "notes": "six-letter word with its 01-grid, growth-diagram borders, "
             "and the (P, Q) pair they encode",
    "word": [2, 1, 3, 3, 1, 2],
    "P": [[1, 2], [2, 3]],
    "Q": [[[1], [3, 4]], [[2, 5], [6]]],
    "grid_rows": 3,
    "grid_cols": 6,
    "grid_marks": [[2, 1], [1, 2], [3, 3], [3, 4], [1, 5], [2, 6]],
    "right_border": [[], [1], [2, 1], [2, 2]],
})

write("jdt_slide_example.json", {
    "id": "jdt-slide-example",
    "notes": "forward slide with two starting holes; one stage flips two "
             "equal entries against the same hole",
    "outer": [3, 3, 2],
    "inner": [2, 1],
    "entries": [[[1, 3], 2], [[2, 2], 2], [[2, 3], 3], [[3, 1], 1],
                [[3, 2], 3]],
    "corners": [[2, 1], [1, 2]],
    "result_outer": [3, 2, 1],
    "result_inner": [1],
    "result_entries": [[[1, 2], 2], [[1, 3], 3], [[2, 1], 1], [[2, 2], 3],
                       [[3, 1], 3]],
})

write("revjdt_slide_example.json", {
    "id": "revjdt-slide-example",
    "notes": "reverse slide undoing the forward example's geometry",
    "outer": [3, 2, 1],
    "inner": [1],
    "entries": [[[1, 2], 1], [[1, 3], 2], [[2, 1], 1], [[2, 2], 2],
                [[3, 1], 3]],
    "corners": [[3, 2], [2, 3]],
    "result_outer": [3, 3, 2],
    "result_inner": [2, 1],
    "result_entries": [[[1, 3], 1], [[2, 2], 1], [[2, 3], 2], [[3, 1], 1],
                       [[3, 2], 3]],
})

write("prime_transform_example.json", {
    "id": "prime-transform-example",
    "notes": "corner rotation on the insertion tableau of 236126415",
    "word": [2, 3, 6, 1, 2, 6, 4, 1, 5],
    "P": [[1, 2, 4, 5], [2, 3, 6], [3]],
    "P_prime": [[1, 2, 3, 4], [2, 5, 6], [6]],
})

write("rect_map_example.json", {
    "id": "rect-map-example",
    "notes": "full worked bottom-row move on a 12-row stack shape; the "
             "mapped rectangle spans rows 1-9 and columns 1-12",
    "source": {
        "kind": "rowspec",
        "lengths": [12, 12, 15, 15, 15, 15, 15, 12, 12, 8, 8, 8],
        "ones": [[3, 1], [12, 2], [10, 3], [4, 4], [9, 5], [11, 6], [1, 7],
                 [3, 8], [9, 9], [5, 10], [1, 11], [8, 12], [6, 13], [4, 14],
                 [7, 15]],
    },
    "target": {
        "kind": "rowspec",
        "lengths": [12, 15, 15, 15, 15, 15, 12, 12, 12, 8, 8, 8],
        "ones": [[3, 1], [12, 2], [10, 3], [8, 4], [9, 5], [11, 6], [2, 7],
                 [3, 8], [9, 9], [8, 10], [4, 11], [7, 12], [5, 13], [3, 14],
                 [6, 15]],
    },
    "rect_word": [2, 3, 6, 1, 2, 6, 4, 1, 5],
    "rect_word_mapped": [2, 5, 6, 1, 2, 6, 5, 3, 4],
    "rect": {"rowLo": 1, "rowHi": 9, "colLo": 1, "colHi": 12},
    "moved_row_to": 9,
})

write("counterexample_arbitrary_row.json", {
    "id": "counterexample-arbitrary-row",
    "notes": "moving a non-bottom row (third from below) up with the same "
             "rectangle map drops the longest ne-chain from 5 to 4",
    "moved_row": 3,
    "source": {
        "kind": "rowspec",
        "lengths": [13, 13, 16, 16, 19, 19, 18, 18],
        "ones": [[7, 1], [4, 2], [6, 3], [7, 4], [1, 5], [5, 6], [2, 7],
                 [8, 8], [4, 9], [5, 10], [3, 11], [7, 12], [1, 13], [5, 14],
                 [7, 15], [3, 16], [5, 17], [8, 18], [6, 19]],
        "ne": 5, "se": 6,
    },
    "target": {
        "kind": "rowspec",
        "lengths": [13, 13, 16, 19, 19, 18, 18, 16],
        "ones": [[8, 1], [3, 2], [5, 3], [6, 4], [1, 5], [5, 6], [2, 7],
                 [7, 8], [4, 9], [4, 10], [3, 11], [6, 12], [1, 13], [4, 14],
                 [6, 15], [3, 16], [4, 17], [7, 18], [5, 19]],
        "ne": 4, "se": 6,
    },
})

fig24_rows = [(1, 1, 16), (2, 1, 16), (3, 1, 18), (4, 1, 18), (5, 1, 18),
              (6, 1, 18), (7, 5, 14), (8, 5, 14)]
fig25_rows = [(1, 1, 16), (2, 1, 18), (3, 1, 18), (4, 1, 18), (5, 1, 18),
              (6, 1, 16), (7, 5, 14), (8, 5, 14)]
write("counterexample_moon_bottom_row.json", {
    "id": "counterexample-moon-bottom-row",
    "notes": "bottom-row move on a moon (non-stack) shape with indented top "
             "rows; the ne statistic drops from 5 to 4",
    "moved_row": 1,
    "source": {
        "kind": "cells",
        "cells": cells_from_rows(fig24_rows),
        "ones": [[5, 1], [2, 2], [4, 3], [5, 4], [3, 5], [6, 6], [2, 7],
                 [3, 8], [7, 9], [1, 10], [5, 11], [7, 12], [3, 13], [8, 14],
                 [5, 15], [1, 16], [3, 17], [6, 18]],
        "ne": 5, "se": 5,
    },
    "target": {
        "kind": "cells",
        "cells": cells_from_rows(fig25_rows),
        "ones": [[6, 1], [1, 2], [3, 3], [4, 4], [3, 5], [5, 6], [2, 7],
                 [2, 8], [7, 9], [1, 10], [4, 11], [7, 12], [2, 13], [8, 14],
                 [4, 15], [1, 16], [2, 17], [5, 18]],
        "ne": 4, "se": 5,
    },
})

m1 = [(1, 3, 6), (2, 1, 6), (3, 1, 7), (4, 1, 7), (5, 2, 6), (6, 4, 6)]
m2 = [(1, 2, 5), (2, 1, 6), (3, 1, 7), (4, 1, 7), (5, 1, 5), (6, 3, 5)]
m3 = [(1, 1, 4), (2, 1, 6), (3, 1, 7), (4, 1, 7), (5, 1, 5), (6, 2, 4)]
m4 = [(1, 1, 4), (2, 1, 6), (3, 1, 7), (4, 1, 7), (5, 1, 5), (6, 1, 3)]
write("conjecture_moon_family.json", {
    "id": "conjecture-moon-family",
    "notes": "four moon shapes sharing the row-length multiset {3,4,5,6,7,7}; "
             "their joint (ne,se) distributions are conjectured equal. The "
             "published polynomial is recorded for the match attempt; its "
             "summation convention is unstated (no constant or xy term).",
    "shapes": [
        {"kind": "cells", "cells": cells_from_rows(m1)},
        {"kind": "cells", "cells": cells_from_rows(m2)},
        {"kind": "cells", "cells": cells_from_rows(m3)},
        {"kind": "cells", "cells": cells_from_rows(m4)},
    ],
    "cell_count": 32,
    "published_poly": [
        {"ne": 3, "se": 3, "count": 40},
        {"ne": 3, "se": 2, "count": 238}, {"ne": 2, "se": 3, "count": 238},
        {"ne": 3, "se": 1, "count": 4}, {"ne": 1, "se": 3, "count": 4},
        {"ne": 2, "se": 2, "count": 348},
        {"ne": 2, "se": 1, "count": 2}, {"ne": 1, "se": 2, "count": 2},
    ],
})

a1 = [(1, 1, 7), (2, 1, 7), (3, 1, 7), (4, 2, 7), (5, 1, 7)]
write("almost_moon_row.json", {
    "id": "almost-moon-row",
    "notes": "five-row shape with one exceptional (short) row between longer "
             "rows; its (ne,se) distribution is asymmetric",
    "shape": {"kind": "cells", "cells": cells_from_rows(a1)},
    "cell_count": 34,
    "exceptional_row": 4,
    "published_poly": [
        {"ne": 5, "se": 3, "count": 15}, {"ne": 3, "se": 5, "count": 13},
        {"ne": 4, "se": 4, "count": 56},
        {"ne": 5, "se": 2, "count": 80}, {"ne": 2, "se": 5, "count": 82},
        {"ne": 4, "se": 3, "count": 1180}, {"ne": 3, "se": 4, "count": 1178},
        {"ne": 5, "se": 1, "count": 5}, {"ne": 1, "se": 5, "count": 5},
        {"ne": 4, "se": 2, "count": 1210}, {"ne": 2, "se": 4, "count": 1212},
        {"ne": 3, "se": 3, "count": 5370},
        {"ne": 4, "se": 1, "count": 10}, {"ne": 1, "se": 4, "count": 10},
        {"ne": 3, "se": 2, "count": 1477}, {"ne": 2, "se": 3, "count": 1473},
        {"ne": 2, "se": 2, "count": 64},
    ],
})

a2_cells = cells_from_rows([(1, 1, 7), (2, 1, 7), (3, 1, 7), (4, 1, 7)])
a2_cells += [[5, 1], [5, 2], [5, 4], [5, 5], [5, 6], [5, 7]]
write("almost_moon_col.json", {
    "id": "almost-moon-col",
    "notes": "shape with one exceptional (short) column between taller "
             "columns; its (ne,se) distribution is asymmetric",
    "shape": {"kind": "cells", "cells": sorted(a2_cells)},
    "cell_count": 34,
    "exceptional_col": 3,
    "published_poly": [
        {"ne": 5, "se": 3, "count": 8}, {"ne": 3, "se": 5, "count": 15},
        {"ne": 4, "se": 4, "count": 48},
        {"ne": 5, "se": 2, "count": 83}, {"ne": 2, "se": 5, "count": 77},
        {"ne": 4, "se": 3, "count": 1129}, {"ne": 3, "se": 4, "count": 1174},
        {"ne": 5, "se": 1, "count": 9}, {"ne": 1, "se": 5, "count": 8},
        {"ne": 4, "se": 2, "count": 1273}, {"ne": 2, "se": 4, "count": 1227},
        {"ne": 3, "se": 3, "count": 5434},
        {"ne": 4, "se": 1, "count": 6}, {"ne": 1, "se": 4, "count": 7},
        {"ne": 3, "se": 2, "count": 1415}, {"ne": 2, "se": 3, "count": 1467},
        {"ne": 2, "se": 2, "count": 60},
    ],
})

write("linked_growth_example.json", {
    "id": "linked-growth-example",
    "notes": "seven-element linked partition, its staircase filling, the "
             "border reading with marked corners, and the transpose-rebuild "
             "image",
    "n": 7,
    "blocks": [[1, 2, 3, 5, 6], [2, 4, 7]],
    "triangle_ones": [[1, 2], [1, 3], [1, 5], [1, 6], [2, 1], [2, 4]],
    "cross": 2,
    "nest": 2,
    "border": {
        "shapes": [[], [], [1], [1], [2, 1], [2, 1], [2, 1], [1, 1], [1, 1],
                   [1, 1], [1, 1], [1], [1], [], []],
        "marks": [[3, 1], [5, 2], [9, 2]],
    },
    "transpose_image_blocks": [[1, 2, 4, 7], [2, 3, 5, 6]],
    "transpose_image_ones": [[1, 1], [1, 4], [1, 6], [2, 2], [2, 3], [2, 5]],
})

write("linked_witness_n16.json", {
    "id": "linked-witness-n16",
    "notes": "sixteen-element witness separating the two bijections",
    "n": 16,
    "L": [[1, 2, 4, 7, 10], [2, 3, 6, 15], [3, 11], [4, 5, 8],
          [5, 12, 14, 16], [6, 9], [7, 13]],
    "L1": [[1, 2, 3, 8, 9, 13], [2, 5, 14], [3, 4, 6], [4, 12, 16],
           [5, 7, 11], [6, 15], [7, 10]],
    "L2": [[1, 2, 3, 13], [2, 5, 14], [3, 4, 6], [4, 12, 16], [5, 7, 8, 9],
           [6, 11, 15], [7, 10]],
})

fig1a = [(1, 3, 4), (2, 2, 4), (3, 1, 5), (4, 1, 6), (5, 1, 6), (6, 2, 5),
         (7, 4, 4)]
write("shape_gallery.json", {
    "id": "shape-gallery",
    "notes": "classification gallery: a moon shape and the stack shape with "
             "the same row lengths, plus the worked bottom-row move chain",
    "moon": {"kind": "cells", "cells": cells_from_rows(fig1a)},
    "stack": {"kind": "rowspec", "lengths": [2, 3, 5, 6, 6, 4, 1]},
    "move_chain": [[3, 4, 5, 4, 2], [4, 5, 4, 3, 2], [5, 4, 4, 3, 2]],
})

write("rowsum_counterexample.json", {
    "id": "rowsum-counterexample",
    "notes": "fixing per-row counts breaks the row-permutation invariance: "
             "with 4 ones in the bottom row and 1 in each other row, "
             "(ne,se)=(4,1) is impossible while (1,4) occurs once",
    "shape": {"kind": "rowspec", "lengths": [7, 7, 6, 4]},
    "row_sums": [4, 1, 1, 1],
    "n": 7,
    "zero_at": {"ne": 4, "se": 1},
    "one_at": {"ne": 1, "se": 4},
})

print("fixtures written to", OUT)
