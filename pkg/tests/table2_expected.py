"""Frozen expected data for the exceptional-partition table: 80 rows of
(index, N, partition, max degree, printed 3-significant-figure ratio)."""

TABLE2 = [
    (1, 2, "(2)", 30, "10.0"),
    (2, 3, "(3)", 7, "6.66"),
    (3, 3, "(2,1)", 10, "3.33"),
    (4, 4, "(4)", 10, "40.0"),
    (5, 4, "(3,1)", 3, "1.67"),
    (6, 4, "(2^2)", 17, "33.3"),
    (7, 4, "(2,1^2)", 5, "1.67"),
    (8, 5, "(5)", 3, "2.67"),
    (9, 5, "(4,1)", 6, "8.00"),
    (10, 5, "(3,2)", 5, "6.67"),
    (11, 5, "(2^2,1)", 7, "6.67"),
    (12, 5, "(2,1^3)", 3, "1.00"),
    (13, 6, "(6)", 6, "37.3"),
    (14, 6, "(4,2)", 6, "26.7"),
    (15, 6, "(4,1^2)", 4, "2.67"),
    (16, 6, "(3^2)", 4, "4.45"),
    (17, 6, "(3,2,1)", 3, "1.11"),
    (18, 6, "(2^3)", 12, "66.7"),
    (19, 6, "(2^2,1^2)", 4, "2.22"),
    (20, 7, "(6,1)", 4, "5.33"),
    (21, 7, "(5,2)", 3, "1.27"),
    (22, 7, "(4,3)", 4, "7.62"),
    (23, 7, "(4,2,1)", 4, "3.81"),
    (24, 7, "(4,1^3)", 3, "1.14"),
    (25, 7, "(3,2^2)", 4, "6.35"),
    (26, 7, "(2^3,1)", 6, "9.53"),
    (27, 8, "(8)", 3, "3.95"),
    (28, 8, "(6,2)", 4, "13.3"),
    (29, 8, "(6,1^2)", 3, "1.33"),
    (30, 8, "(4^2)", 5, "45.7"),
    (31, 8, "(4,2^2)", 5, "19.0"),
    (32, 8, "(3^2,2)", 3, "1.59"),
    (33, 8, "(2^4)", 9, "95.2"),
    (34, 8, "(2^3,1^2)", 4, "2.38"),
    (35, 9, "(6,3)", 3, "2.96"),
    (36, 9, "(6,2,1)", 3, "1.48"),
    (37, 9, "(4^2,1)", 3, "5.08"),
    (38, 9, "(4,3,2)", 3, "2.12"),
    (39, 9, "(4,2^2,1)", 3, "2.12"),
    (40, 9, "(3^3)", 3, "1.06"),
    (41, 9, "(3,2^3)", 4, "5.29"),
    (42, 9, "(2^4,1)", 5, "10.6"),
    (43, 10, "(6,4)", 3, "7.11"),
    (44, 10, "(6,2^2)", 3, "5.93"),
    (45, 10, "(4^2,2)", 4, "10.2"),
    (46, 10, "(4^2,1^2)", 3, "1.02"),
    (47, 10, "(4,2^3)", 4, "12.7"),
    (48, 10, "(2^5)", 7, "106"),
    (49, 10, "(2^4,1^2)", 3, "2.12"),
    (50, 11, "(4^2,3)", 3, "1.85"),
    (51, 11, "(4,2^3,1)", 3, "1.15"),
    (52, 11, "(3,2^4)", 3, "3.85"),
    (53, 11, "(2^5,1)", 4, "9.62"),
    (54, 12, "(6^2)", 3, "3.02"),
    (55, 12, "(6,4,2)", 3, "1.08"),
    (56, 12, "(6,2^3)", 3, "2.70"),
    (57, 12, "(4^3)", 3, "11.1"),
    (58, 12, "(4^2,2^2)", 3, "3.08"),
    (59, 12, "(4,2^4)", 4, "7.70"),
    (60, 12, "(2^6)", 6, "96.2"),
    (61, 12, "(2^5,1^2)", 3, "1.60"),
    (62, 13, "(3,2^5)", 3, "2.47"),
    (63, 13, "(2^6,1)", 4, "7.40"),
    (64, 14, "(6,2^4)", 3, "1.18"),
    (65, 14, "(4^3,2)", 3, "1.22"),
    (66, 14, "(4^2,2^3)", 3, "1.01"),
    (67, 14, "(4,2^5)", 3, "4.23"),
    (68, 14, "(2^7)", 5, "74.0"),
    (69, 14, "(2^6,1^2)", 3, "1.06"),
    (70, 15, "(3,2^6)", 3, "1.41"),
    (71, 15, "(2^7,1)", 3, "4.93"),
    (72, 16, "(4,2^6)", 3, "2.11"),
    (73, 16, "(2^8)", 4, "49.3"),
    (74, 17, "(2^8,1)", 3, "2.90"),
    (75, 18, "(2^9)", 4, "29.0"),
    (76, 19, "(2^9,1)", 3, "1.53"),
    (77, 20, "(2^10)", 3, "15.3"),
    (78, 22, "(2^11)", 3, "7.27"),
    (79, 24, "(2^12)", 3, "3.16"),
    (80, 26, "(2^13)", 3, "1.27"),
]
