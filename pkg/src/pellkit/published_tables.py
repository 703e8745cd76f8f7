"""Published class-number tables for the four m-families, transcribed
verbatim as audit data.

Each entry is (p, n, m_as_printed, h_as_printed, starred).  The values are a
trusted transcription layer, deliberately separate from any computation: the
`families.reproduce_table` audit recomputes m from (p, n) and h from the
class-number engine and compares.  The single starred entry was published
with a square factor in m (7227 = 3^2 * 803).
"""

from __future__ import annotations

# m = (2np)^2 - 1
TABLE_1 = (
    (5, 2, 399, 8, False), (5, 3, 899, 6, False),
    (5, 4, 1599, 12, False), (5, 6, 3599, 10, False),
    (5, 7, 4899, 16, False), (13, 2, 2703, 12, False),
    (13, 3, 6083, 8, False), (13, 4, 10815, 16, False),
    (13, 5, 16899, 40, False), (17, 1, 1155, 8, False),
    (17, 2, 4623, 16, False), (17, 3, 10403, 14, False),
    (17, 4, 18495, 12, False), (29, 1, 3363, 8, False),
    (29, 4, 53823, 40, False), (37, 3, 49283, 24, False),
    (37, 6, 197135, 72, False), (41, 2, 26895, 32, False),
    (41, 4, 26895, 32, False), (41, 5, 168099, 72, False),
    (53, 1, 11235, 24, False), (53, 2, 44943, 20, False),
    (53, 3, 101123, 36, False), (59, 2, 55695, 32, False),
)

# m = (2np)^2 + 3 with 3 | n
TABLE_2 = (
    (3, 3, 327, 2, False), (3, 6, 1299, 8, False),
    (3, 9, 2919, 8, False), (5, 3, 903, 4, False),
    (5, 6, 3603, 4, False), (5, 9, 8103, 8, False),
    (7, 3, 1767, 4, False), (7, 6, 7059, 8, False),
    (7, 9, 15879, 12, False), (11, 3, 4359, 10, False),
    (11, 6, 174427, 16, False), (11, 9, 39207, 16, False),
    (13, 3, 6087, 10, False), (13, 6, 24339, 16, False),
    (13, 9, 54759, 30, False), (17, 3, 10407, 6, False),
    (19, 3, 1299, 16, False), (19, 6, 51987, 16, False),
    (19, 9, 116967, 24, False), (29, 3, 30279, 18, False),
    (29, 6, 121107, 24, False), (29, 9, 272487, 24, False),
    (31, 3, 34599, 20, False), (31, 6, 138387, 24, False),
    (31, 9, 311367, 36, False), (37, 3, 49287, 20, False),
    (37, 6, 197139, 32, False), (37, 9, 443559, 78, False),
    (41, 3, 60519, 38, False), (41, 6, 242067, 36, False),
)

# m = ((2n+1)p)^2 + 2
TABLE_3 = (
    (7, 1, 443, 3, False), (7, 2, 1227, 4, False),
    (17, 1, 2603, 4, False), (17, 2, 7227, 2, True),
    (17, 3, 14163, 10, False), (17, 4, 23411, 10, False),
    (17, 5, 34971, 18, False), (23, 1, 4763, 4, False),
    (23, 2, 13227, 10, False), (23, 3, 25923, 16, False),
    (23, 4, 42851, 20, False), (23, 5, 64011, 24, False),
    (31, 1, 9218, 6, False), (31, 2, 24027, 10, False),
    (31, 3, 47091, 32, False), (31, 4, 77843, 12, False),
    (31, 5, 116283, 16, False), (41, 1, 15131, 15, False),
    (41, 2, 42027, 10, False), (41, 3, 82371, 44, False),
    (41, 4, 136163, 21, False), (41, 5, 203403, 24, False),
    (47, 1, 19883, 6, False), (47, 2, 55227, 20, False),
    (47, 4, 178931, 33, False), (71, 1, 45371, 22, False),
    (71, 3, 247011, 44, False), (71, 4, 408323, 28, False),
    (71, 5, 609963, 58, False), (73, 1, 47963, 9, False),
    (73, 3, 261123, 38, False), (73, 4, 431651, 52, False),
)

# m = ((2n+1)p)^2 - 2
TABLE_4 = (
    (11, 1, 1087, 7, False), (11, 2, 3023, 3, False),
    (11, 3, 5927, 5, False), (11, 4, 9799, 18, False),
    (11, 5, 14639, 17, False), (17, 1, 2599, 14, False),
    (17, 2, 7223, 4, False), (17, 3, 14159, 9, False),
    (17, 4, 23407, 16, False), (17, 5, 34967, 16, False),
    (19, 1, 3247, 8, False), (19, 2, 9023, 8, False),
    (19, 3, 17687, 6, False), (19, 4, 29239, 34, False),
    (41, 1, 15127, 10, False), (41, 2, 42023, 15, False),
    (41, 3, 82367, 14, False), (41, 4, 136159, 78, False),
    (43, 1, 16639, 24, False), (43, 2, 46223, 16, False),
    (43, 3, 90599, 19, False), (43, 4, 149767, 39, False),
    (43, 5, 223727, 24, False), (59, 1, 31327, 27, False),
    (59, 2, 87023, 12, False), (59, 3, 170567, 16, False),
    (59, 4, 281959, 55, False), (59, 5, 42119, 66, False),
    (73, 1, 47959, 42, False), (73, 2, 133223, 14, False),
    (73, 3, 261119, 38, False), (73, 4, 431647, 46, False),
)

TABLES = {1: TABLE_1, 2: TABLE_2, 3: TABLE_3, 4: TABLE_4}

TABLE_FAMILY = {1: "F1", 2: "F2", 3: "F3", 4: "F4"}
