"""Exact H3 F-symbol tables.

Entry values are (sign, atom, i, j) meaning sign * atom * p1^i * p2^j,
with atom one of "1", "A", "sA" (the square root of A), "B", "C",
"D+", "D-".  Keys are object-token tuples (a, b, c, u).  Matrix blocks
map (a, b, c, u) to (row_labels, col_labels, cells); row labels index
the internal edge of the right-associated tree, column labels the
left-associated one.
"""

ONE_DIM = {
    ('1', '1', '1', '1'): (1, '1', 0, 0),
    ('1', '1', 'a', 'a'): (1, '1', 0, 0),
    ('1', '1', 'ar', 'ar'): (1, '1', 0, 0),
    ('1', '1', 'as', 'as'): (1, '1', 0, 0),
    ('1', '1', 'asr', 'asr'): (1, '1', 0, 0),
    ('1', '1', 'r', 'r'): (1, '1', 0, 0),
    ('1', 'a', '1', 'a'): (1, '1', 0, 0),
    ('1', 'a', 'a', 'as'): (1, '1', 0, 0),
    ('1', 'a', 'ar', 'asr'): (1, '1', 0, 0),
    ('1', 'a', 'as', '1'): (1, '1', 0, 0),
    ('1', 'a', 'asr', 'r'): (1, '1', 0, 0),
    ('1', 'a', 'r', 'ar'): (1, '1', 0, 0),
    ('1', 'ar', '1', 'ar'): (1, '1', 0, 0),
    ('1', 'ar', 'a', 'r'): (1, '1', 0, 0),
    ('1', 'ar', 'ar', '1'): (1, '1', 0, 0),
    ('1', 'ar', 'ar', 'ar'): (1, '1', 0, 0),
    ('1', 'ar', 'ar', 'asr'): (1, '1', 0, 0),
    ('1', 'ar', 'ar', 'r'): (1, '1', 0, 0),
    ('1', 'ar', 'as', 'asr'): (1, '1', 0, 0),
    ('1', 'ar', 'asr', 'ar'): (1, '1', 0, 0),
    ('1', 'ar', 'asr', 'as'): (1, '1', 0, 0),
    ('1', 'ar', 'asr', 'asr'): (1, '1', 0, 0),
    ('1', 'ar', 'asr', 'r'): (1, '1', 0, 0),
    ('1', 'ar', 'r', 'a'): (1, '1', 0, 0),
    ('1', 'ar', 'r', 'ar'): (1, '1', 0, 0),
    ('1', 'ar', 'r', 'asr'): (1, '1', 0, 0),
    ('1', 'ar', 'r', 'r'): (1, '1', 0, 0),
    ('1', 'as', '1', 'as'): (1, '1', 0, 0),
    ('1', 'as', 'a', '1'): (1, '1', 0, 0),
    ('1', 'as', 'ar', 'r'): (1, '1', 0, 0),
    ('1', 'as', 'as', 'a'): (1, '1', 0, 0),
    ('1', 'as', 'asr', 'ar'): (1, '1', 0, 0),
    ('1', 'as', 'r', 'asr'): (1, '1', 0, 0),
    ('1', 'asr', '1', 'asr'): (1, '1', 0, 0),
    ('1', 'asr', 'a', 'ar'): (1, '1', 0, 0),
    ('1', 'asr', 'ar', 'a'): (1, '1', 0, 0),
    ('1', 'asr', 'ar', 'ar'): (1, '1', 0, 0),
    ('1', 'asr', 'ar', 'asr'): (1, '1', 0, 0),
    ('1', 'asr', 'ar', 'r'): (1, '1', 0, 0),
    ('1', 'asr', 'as', 'r'): (1, '1', 0, 0),
    ('1', 'asr', 'asr', '1'): (1, '1', 0, 0),
    ('1', 'asr', 'asr', 'ar'): (1, '1', 0, 0),
    ('1', 'asr', 'asr', 'asr'): (1, '1', 0, 0),
    ('1', 'asr', 'asr', 'r'): (1, '1', 0, 0),
    ('1', 'asr', 'r', 'ar'): (1, '1', 0, 0),
    ('1', 'asr', 'r', 'as'): (1, '1', 0, 0),
    ('1', 'asr', 'r', 'asr'): (1, '1', 0, 0),
    ('1', 'asr', 'r', 'r'): (1, '1', 0, 0),
    ('1', 'r', '1', 'r'): (1, '1', 0, 0),
    ('1', 'r', 'a', 'asr'): (1, '1', 0, 0),
    ('1', 'r', 'ar', 'ar'): (1, '1', 0, 0),
    ('1', 'r', 'ar', 'as'): (1, '1', 0, 0),
    ('1', 'r', 'ar', 'asr'): (1, '1', 0, 0),
    ('1', 'r', 'ar', 'r'): (1, '1', 0, 0),
    ('1', 'r', 'as', 'ar'): (1, '1', 0, 0),
    ('1', 'r', 'asr', 'a'): (1, '1', 0, 0),
    ('1', 'r', 'asr', 'ar'): (1, '1', 0, 0),
    ('1', 'r', 'asr', 'asr'): (1, '1', 0, 0),
    ('1', 'r', 'asr', 'r'): (1, '1', 0, 0),
    ('1', 'r', 'r', '1'): (1, '1', 0, 0),
    ('1', 'r', 'r', 'ar'): (1, '1', 0, 0),
    ('1', 'r', 'r', 'asr'): (1, '1', 0, 0),
    ('1', 'r', 'r', 'r'): (1, '1', 0, 0),
    ('a', '1', '1', 'a'): (1, '1', 0, 0),
    ('a', '1', 'a', 'as'): (1, '1', 0, 0),
    ('a', '1', 'ar', 'asr'): (1, '1', 0, 0),
    ('a', '1', 'as', '1'): (1, '1', 0, 0),
    ('a', '1', 'asr', 'r'): (1, '1', 0, 0),
    ('a', '1', 'r', 'ar'): (1, '1', 0, 0),
    ('a', 'a', '1', 'as'): (1, '1', 0, 0),
    ('a', 'a', 'a', '1'): (1, '1', 0, 0),
    ('a', 'a', 'ar', 'r'): (1, '1', 0, 0),
    ('a', 'a', 'as', 'a'): (1, '1', 0, 0),
    ('a', 'a', 'asr', 'ar'): (-1, '1', 1, 0),
    ('a', 'a', 'r', 'asr'): (1, '1', 0, 0),
    ('a', 'ar', '1', 'asr'): (1, '1', 0, 0),
    ('a', 'ar', 'a', 'ar'): (1, '1', 1, 0),
    ('a', 'ar', 'ar', 'a'): (1, '1', 0, 0),
    ('a', 'ar', 'ar', 'ar'): (-1, '1', 1, 0),
    ('a', 'ar', 'ar', 'asr'): (1, '1', 0, 0),
    ('a', 'ar', 'ar', 'r'): (1, '1', 0, 0),
    ('a', 'ar', 'as', 'r'): (1, '1', 0, 0),
    ('a', 'ar', 'asr', '1'): (-1, '1', 1, 0),
    ('a', 'ar', 'asr', 'ar'): (-1, '1', 1, 0),
    ('a', 'ar', 'asr', 'asr'): (1, '1', 0, 0),
    ('a', 'ar', 'asr', 'r'): (1, '1', 1, 1),
    ('a', 'ar', 'r', 'ar'): (1, '1', 1, 0),
    ('a', 'ar', 'r', 'as'): (1, '1', 0, 0),
    ('a', 'ar', 'r', 'asr'): (1, '1', 0, 0),
    ('a', 'ar', 'r', 'r'): (1, '1', 0, 0),
    ('a', 'as', '1', '1'): (1, '1', 0, 0),
    ('a', 'as', 'a', 'a'): (1, '1', 0, 0),
    ('a', 'as', 'ar', 'ar'): (1, '1', 0, 0),
    ('a', 'as', 'as', 'as'): (1, '1', 0, 0),
    ('a', 'as', 'asr', 'asr'): (-1, '1', 1, 0),
    ('a', 'as', 'r', 'r'): (1, '1', 0, 0),
    ('a', 'asr', '1', 'r'): (1, '1', 0, 0),
    ('a', 'asr', 'a', 'asr'): (-1, '1', 1, 0),
    ('a', 'asr', 'ar', 'ar'): (1, '1', 0, 0),
    ('a', 'asr', 'ar', 'as'): (1, '1', 0, 0),
    ('a', 'asr', 'ar', 'asr'): (-1, '1', 1, 0),
    ('a', 'asr', 'ar', 'r'): (1, '1', 0, 0),
    ('a', 'asr', 'as', 'ar'): (-1, '1', 0, 0),
    ('a', 'asr', 'asr', 'a'): (1, '1', 0, 0),
    ('a', 'asr', 'asr', 'ar'): (1, '1', 0, 0),
    ('a', 'asr', 'asr', 'asr'): (-1, '1', 1, 0),
    ('a', 'asr', 'asr', 'r'): (1, '1', 0, 0),
    ('a', 'asr', 'r', '1'): (1, '1', 0, 0),
    ('a', 'asr', 'r', 'ar'): (1, '1', 0, 0),
    ('a', 'asr', 'r', 'asr'): (-1, '1', 1, 0),
    ('a', 'asr', 'r', 'r'): (1, '1', 0, 0),
    ('a', 'r', '1', 'ar'): (1, '1', 0, 0),
    ('a', 'r', 'a', 'r'): (-1, '1', 0, 0),
    ('a', 'r', 'ar', '1'): (1, '1', 0, 0),
    ('a', 'r', 'ar', 'ar'): (1, '1', 0, 0),
    ('a', 'r', 'ar', 'asr'): (1, '1', 0, 0),
    ('a', 'r', 'ar', 'r'): (1, '1', 0, 0),
    ('a', 'r', 'as', 'asr'): (-1, '1', 0, 0),
    ('a', 'r', 'asr', 'ar'): (1, '1', 0, 0),
    ('a', 'r', 'asr', 'as'): (-1, '1', 1, 0),
    ('a', 'r', 'asr', 'asr'): (1, '1', 1, 1),
    ('a', 'r', 'asr', 'r'): (1, '1', 0, 0),
    ('a', 'r', 'r', 'a'): (1, '1', 0, 0),
    ('a', 'r', 'r', 'ar'): (1, '1', 0, 0),
    ('a', 'r', 'r', 'asr'): (1, '1', 0, 0),
    ('a', 'r', 'r', 'r'): (-1, '1', 0, 0),
    ('ar', '1', '1', 'ar'): (1, '1', 0, 0),
    ('ar', '1', 'a', 'r'): (1, '1', 0, 0),
    ('ar', '1', 'ar', '1'): (1, '1', 0, 0),
    ('ar', '1', 'ar', 'ar'): (1, '1', 0, 0),
    ('ar', '1', 'ar', 'asr'): (1, '1', 0, 0),
    ('ar', '1', 'ar', 'r'): (1, '1', 0, 0),
    ('ar', '1', 'as', 'asr'): (1, '1', 0, 0),
    ('ar', '1', 'asr', 'ar'): (1, '1', 0, 0),
    ('ar', '1', 'asr', 'as'): (1, '1', 0, 0),
    ('ar', '1', 'asr', 'asr'): (1, '1', 0, 0),
    ('ar', '1', 'asr', 'r'): (1, '1', 0, 0),
    ('ar', '1', 'r', 'a'): (1, '1', 0, 0),
    ('ar', '1', 'r', 'ar'): (1, '1', 0, 0),
    ('ar', '1', 'r', 'asr'): (1, '1', 0, 0),
    ('ar', '1', 'r', 'r'): (1, '1', 0, 0),
    ('ar', 'a', '1', 'r'): (1, '1', 0, 0),
    ('ar', 'a', 'a', 'asr'): (-1, '1', 1, 0),
    ('ar', 'a', 'ar', 'ar'): (-1, '1', 1, 0),
    ('ar', 'a', 'ar', 'as'): (-1, '1', 0, 0),
    ('ar', 'a', 'ar', 'asr'): (-1, '1', 1, 0),
    ('ar', 'a', 'ar', 'r'): (1, '1', 0, 0),
    ('ar', 'a', 'as', 'ar'): (1, '1', 0, 0),
    ('ar', 'a', 'asr', 'a'): (-1, '1', 0, 0),
    ('ar', 'a', 'asr', 'ar'): (1, '1', 1, 1),
    ('ar', 'a', 'asr', 'asr'): (-1, '1', 1, 0),
    ('ar', 'a', 'asr', 'r'): (1, '1', 0, 0),
    ('ar', 'a', 'r', '1'): (1, '1', 0, 0),
    ('ar', 'a', 'r', 'ar'): (1, '1', 0, 0),
    ('ar', 'a', 'r', 'asr'): (-1, '1', 0, 0),
    ('ar', 'a', 'r', 'r'): (1, '1', 0, 0),
    ('ar', 'ar', '1', '1'): (1, '1', 0, 0),
    ('ar', 'ar', '1', 'ar'): (1, '1', 0, 0),
    ('ar', 'ar', '1', 'asr'): (1, '1', 0, 0),
    ('ar', 'ar', '1', 'r'): (1, '1', 0, 0),
    ('ar', 'ar', 'a', 'a'): (1, '1', 0, 0),
    ('ar', 'ar', 'a', 'ar'): (1, '1', 1, 0),
    ('ar', 'ar', 'a', 'asr'): (1, '1', 1, 0),
    ('ar', 'ar', 'a', 'r'): (1, '1', 0, 0),
    ('ar', 'ar', 'ar', '1'): (1, '1', 0, 0),
    ('ar', 'ar', 'ar', 'a'): (1, '1', 0, 0),
    ('ar', 'ar', 'ar', 'as'): (-1, '1', 0, 0),
    ('ar', 'ar', 'as', 'ar'): (1, '1', 1, 0),
    ('ar', 'ar', 'as', 'as'): (1, '1', 0, 0),
    ('ar', 'ar', 'as', 'asr'): (1, '1', 0, 0),
    ('ar', 'ar', 'as', 'r'): (1, '1', 0, 0),
    ('ar', 'ar', 'asr', '1'): (-1, '1', 0, 0),
    ('ar', 'ar', 'asr', 'a'): (-1, '1', 0, 0),
    ('ar', 'ar', 'asr', 'as'): (1, '1', 0, 0),
    ('ar', 'ar', 'r', '1'): (1, '1', 0, 0),
    ('ar', 'ar', 'r', 'a'): (1, '1', 0, 0),
    ('ar', 'ar', 'r', 'as'): (-1, '1', 0, 0),
    ('ar', 'as', '1', 'asr'): (1, '1', 0, 0),
    ('ar', 'as', 'a', 'ar'): (-1, '1', 1, 0),
    ('ar', 'as', 'ar', 'a'): (-1, '1', 0, 0),
    ('ar', 'as', 'ar', 'ar'): (1, '1', 1, 0),
    ('ar', 'as', 'ar', 'asr'): (-1, '1', 0, 0),
    ('ar', 'as', 'ar', 'r'): (-1, '1', 0, 0),
    ('ar', 'as', 'as', 'r'): (-1, '1', 1, 0),
    ('ar', 'as', 'asr', '1'): (1, '1', 0, 0),
    ('ar', 'as', 'asr', 'ar'): (-1, '1', 0, 0),
    ('ar', 'as', 'asr', 'asr'): (-1, '1', 0, 0),
    ('ar', 'as', 'asr', 'r'): (-1, '1', 1, 1),
    ('ar', 'as', 'r', 'ar'): (-1, '1', 1, 0),
    ('ar', 'as', 'r', 'as'): (-1, '1', 1, 0),
    ('ar', 'as', 'r', 'asr'): (-1, '1', 0, 0),
    ('ar', 'as', 'r', 'r'): (1, '1', 1, 0),
    ('ar', 'asr', '1', 'ar'): (1, '1', 0, 0),
    ('ar', 'asr', '1', 'as'): (1, '1', 0, 0),
    ('ar', 'asr', '1', 'asr'): (1, '1', 0, 0),
    ('ar', 'asr', '1', 'r'): (1, '1', 0, 0),
    ('ar', 'asr', 'a', '1'): (-1, '1', 1, 0),
    ('ar', 'asr', 'a', 'ar'): (1, '1', 0, 0),
    ('ar', 'asr', 'a', 'asr'): (-1, '1', 1, 0),
    ('ar', 'asr', 'a', 'r'): (-1, '1', 0, 0),
    ('ar', 'asr', 'ar', '1'): (1, '1', 0, 0),
    ('ar', 'asr', 'ar', 'a'): (1, '1', 0, 0),
    ('ar', 'asr', 'ar', 'as'): (-1, '1', 0, 0),
    ('ar', 'asr', 'as', 'a'): (-1, '1', 1, 0),
    ('ar', 'asr', 'as', 'ar'): (-1, '1', 0, 0),
    ('ar', 'asr', 'as', 'asr'): (1, '1', 0, 0),
    ('ar', 'asr', 'as', 'r'): (1, '1', 0, 0),
    ('ar', 'asr', 'asr', '1'): (-1, '1', 0, 0),
    ('ar', 'asr', 'asr', 'a'): (-1, '1', 1, 1),
    ('ar', 'asr', 'asr', 'as'): (1, '1', 0, 0),
    ('ar', 'asr', 'r', '1'): (1, '1', 1, 0),
    ('ar', 'asr', 'r', 'a'): (1, '1', 0, 0),
    ('ar', 'asr', 'r', 'as'): (1, '1', 1, 0),
    ('ar', 'r', '1', 'a'): (1, '1', 0, 0),
    ('ar', 'r', '1', 'ar'): (1, '1', 0, 0),
    ('ar', 'r', '1', 'asr'): (1, '1', 0, 0),
    ('ar', 'r', '1', 'r'): (1, '1', 0, 0),
    ('ar', 'r', 'a', 'ar'): (-1, '1', 1, 0),
    ('ar', 'r', 'a', 'as'): (-1, '1', 1, 0),
    ('ar', 'r', 'a', 'asr'): (1, '1', 0, 0),
    ('ar', 'r', 'a', 'r'): (-1, '1', 0, 0),
    ('ar', 'r', 'ar', '1'): (1, '1', 0, 0),
    ('ar', 'r', 'ar', 'a'): (1, '1', 0, 0),
    ('ar', 'r', 'ar', 'as'): (1, '1', 1, 0),
    ('ar', 'r', 'as', '1'): (1, '1', 0, 0),
    ('ar', 'r', 'as', 'ar'): (1, '1', 0, 0),
    ('ar', 'r', 'as', 'asr'): (-1, '1', 0, 0),
    ('ar', 'r', 'as', 'r'): (1, '1', 1, 0),
    ('ar', 'r', 'asr', '1'): (1, '1', 0, 1),
    ('ar', 'r', 'asr', 'a'): (-1, '1', 0, 0),
    ('ar', 'r', 'asr', 'as'): (1, '1', 0, 0),
    ('ar', 'r', 'r', '1'): (1, '1', 0, 0),
    ('ar', 'r', 'r', 'a'): (1, '1', 0, 0),
    ('ar', 'r', 'r', 'as'): (-1, '1', 1, 0),
    ('as', '1', '1', 'as'): (1, '1', 0, 0),
    ('as', '1', 'a', '1'): (1, '1', 0, 0),
    ('as', '1', 'ar', 'r'): (1, '1', 0, 0),
    ('as', '1', 'as', 'a'): (1, '1', 0, 0),
    ('as', '1', 'asr', 'ar'): (1, '1', 0, 0),
    ('as', '1', 'r', 'asr'): (1, '1', 0, 0),
    ('as', 'a', '1', '1'): (1, '1', 0, 0),
    ('as', 'a', 'a', 'a'): (1, '1', 0, 0),
    ('as', 'a', 'ar', 'ar'): (-1, '1', 1, 0),
    ('as', 'a', 'as', 'as'): (1, '1', 0, 0),
    ('as', 'a', 'asr', 'asr'): (1, '1', 0, 0),
    ('as', 'a', 'r', 'r'): (1, '1', 0, 0),
    ('as', 'ar', '1', 'r'): (1, '1', 0, 0),
    ('as', 'ar', 'a', 'asr'): (-1, '1', 0, 0),
    ('as', 'ar', 'ar', 'ar'): (-1, '1', 1, 0),
    ('as', 'ar', 'ar', 'as'): (1, '1', 0, 0),
    ('as', 'ar', 'ar', 'asr'): (1, '1', 0, 0),
    ('as', 'ar', 'ar', 'r'): (1, '1', 0, 0),
    ('as', 'ar', 'as', 'ar'): (1, '1', 1, 0),
    ('as', 'ar', 'asr', 'a'): (-1, '1', 1, 0),
    ('as', 'ar', 'asr', 'ar'): (-1, '1', 0, 1),
    ('as', 'ar', 'asr', 'asr'): (1, '1', 0, 0),
    ('as', 'ar', 'asr', 'r'): (1, '1', 0, 0),
    ('as', 'ar', 'r', '1'): (1, '1', 0, 0),
    ('as', 'ar', 'r', 'ar'): (-1, '1', 1, 0),
    ('as', 'ar', 'r', 'asr'): (-1, '1', 0, 0),
    ('as', 'ar', 'r', 'r'): (1, '1', 0, 0),
    ('as', 'as', '1', 'a'): (1, '1', 0, 0),
    ('as', 'as', 'a', 'as'): (1, '1', 0, 0),
    ('as', 'as', 'ar', 'asr'): (1, '1', 0, 0),
    ('as', 'as', 'as', '1'): (1, '1', 0, 0),
    ('as', 'as', 'asr', 'r'): (-1, '1', 1, 0),
    ('as', 'as', 'r', 'ar'): (-1, '1', 1, 0),
    ('as', 'asr', '1', 'ar'): (1, '1', 0, 0),
    ('as', 'asr', 'a', 'r'): (-1, '1', 0, 0),
    ('as', 'asr', 'ar', '1'): (-1, '1', 1, 0),
    ('as', 'asr', 'ar', 'ar'): (1, '1', 0, 0),
    ('as', 'asr', 'ar', 'asr'): (-1, '1', 1, 0),
    ('as', 'asr', 'ar', 'r'): (1, '1', 0, 0),
    ('as', 'asr', 'as', 'asr'): (-1, '1', 1, 0),
    ('as', 'asr', 'asr', 'ar'): (1, '1', 0, 0),
    ('as', 'asr', 'asr', 'as'): (1, '1', 0, 0),
    ('as', 'asr', 'asr', 'asr'): (-1, '1', 0, 1),
    ('as', 'asr', 'asr', 'r'): (1, '1', 0, 0),
    ('as', 'asr', 'r', 'a'): (-1, '1', 1, 0),
    ('as', 'asr', 'r', 'ar'): (1, '1', 0, 0),
    ('as', 'asr', 'r', 'asr'): (-1, '1', 1, 0),
    ('as', 'asr', 'r', 'r'): (-1, '1', 0, 0),
    ('as', 'r', '1', 'asr'): (1, '1', 0, 0),
    ('as', 'r', 'a', 'ar'): (1, '1', 0, 0),
    ('as', 'r', 'ar', 'a'): (1, '1', 0, 0),
    ('as', 'r', 'ar', 'ar'): (1, '1', 0, 0),
    ('as', 'r', 'ar', 'asr'): (1, '1', 0, 0),
    ('as', 'r', 'ar', 'r'): (1, '1', 0, 0),
    ('as', 'r', 'as', 'r'): (-1, '1', 0, 0),
    ('as', 'r', 'asr', '1'): (1, '1', 0, 0),
    ('as', 'r', 'asr', 'ar'): (1, '1', 0, 0),
    ('as', 'r', 'asr', 'asr'): (1, '1', 0, 0),
    ('as', 'r', 'asr', 'r'): (1, '1', 0, 0),
    ('as', 'r', 'r', 'ar'): (1, '1', 0, 0),
    ('as', 'r', 'r', 'as'): (1, '1', 0, 0),
    ('as', 'r', 'r', 'asr'): (1, '1', 0, 0),
    ('as', 'r', 'r', 'r'): (1, '1', 0, 0),
    ('asr', '1', '1', 'asr'): (1, '1', 0, 0),
    ('asr', '1', 'a', 'ar'): (1, '1', 0, 0),
    ('asr', '1', 'ar', 'a'): (1, '1', 0, 0),
    ('asr', '1', 'ar', 'ar'): (1, '1', 0, 0),
    ('asr', '1', 'ar', 'asr'): (1, '1', 0, 0),
    ('asr', '1', 'ar', 'r'): (1, '1', 0, 0),
    ('asr', '1', 'as', 'r'): (1, '1', 0, 0),
    ('asr', '1', 'asr', '1'): (1, '1', 0, 0),
    ('asr', '1', 'asr', 'ar'): (1, '1', 0, 0),
    ('asr', '1', 'asr', 'asr'): (1, '1', 0, 0),
    ('asr', '1', 'asr', 'r'): (1, '1', 0, 0),
    ('asr', '1', 'r', 'ar'): (1, '1', 0, 0),
    ('asr', '1', 'r', 'as'): (1, '1', 0, 0),
    ('asr', '1', 'r', 'asr'): (1, '1', 0, 0),
    ('asr', '1', 'r', 'r'): (1, '1', 0, 0),
    ('asr', 'a', '1', 'ar'): (1, '1', 0, 0),
    ('asr', 'a', 'a', 'r'): (1, '1', 0, 0),
    ('asr', 'a', 'ar', '1'): (1, '1', 0, 0),
    ('asr', 'a', 'ar', 'ar'): (-1, '1', 0, 0),
    ('asr', 'a', 'ar', 'asr'): (-1, '1', 0, 0),
    ('asr', 'a', 'ar', 'r'): (-1, '1', 1, 1),
    ('asr', 'a', 'as', 'asr'): (-1, '1', 1, 0),
    ('asr', 'a', 'asr', 'ar'): (1, '1', 0, 0),
    ('asr', 'a', 'asr', 'as'): (1, '1', 0, 0),
    ('asr', 'a', 'asr', 'asr'): (1, '1', 1, 0),
    ('asr', 'a', 'asr', 'r'): (-1, '1', 0, 0),
    ('asr', 'a', 'r', 'a'): (1, '1', 1, 0),
    ('asr', 'a', 'r', 'ar'): (-1, '1', 0, 0),
    ('asr', 'a', 'r', 'asr'): (1, '1', 1, 0),
    ('asr', 'a', 'r', 'r'): (1, '1', 1, 0),
    ('asr', 'ar', '1', 'a'): (1, '1', 0, 0),
    ('asr', 'ar', '1', 'ar'): (1, '1', 0, 0),
    ('asr', 'ar', '1', 'asr'): (1, '1', 0, 0),
    ('asr', 'ar', '1', 'r'): (1, '1', 0, 0),
    ('asr', 'ar', 'a', 'ar'): (1, '1', 0, 0),
    ('asr', 'ar', 'a', 'as'): (1, '1', 0, 0),
    ('asr', 'ar', 'a', 'asr'): (-1, '1', 0, 0),
    ('asr', 'ar', 'a', 'r'): (1, '1', 0, 0),
    ('asr', 'ar', 'ar', '1'): (-1, '1', 0, 0),
    ('asr', 'ar', 'ar', 'a'): (1, '1', 0, 0),
    ('asr', 'ar', 'ar', 'as'): (1, '1', 0, 0),
    ('asr', 'ar', 'as', '1'): (-1, '1', 1, 0),
    ('asr', 'ar', 'as', 'ar'): (1, '1', 1, 0),
    ('asr', 'ar', 'as', 'asr'): (1, '1', 0, 0),
    ('asr', 'ar', 'as', 'r'): (1, '1', 1, 1),
    ('asr', 'ar', 'asr', '1'): (1, '1', 0, 0),
    ('asr', 'ar', 'asr', 'a'): (-1, '1', 0, 0),
    ('asr', 'ar', 'asr', 'as'): (-1, '1', 0, 0),
    ('asr', 'ar', 'r', '1'): (1, '1', 1, 0),
    ('asr', 'ar', 'r', 'a'): (-1, '1', 1, 0),
    ('asr', 'ar', 'r', 'as'): (1, '1', 0, 0),
    ('asr', 'as', '1', 'r'): (1, '1', 0, 0),
    ('asr', 'as', 'a', 'asr'): (1, '1', 0, 0),
    ('asr', 'as', 'ar', 'ar'): (-1, '1', 1, 0),
    ('asr', 'as', 'ar', 'as'): (-1, '1', 0, 0),
    ('asr', 'as', 'ar', 'asr'): (-1, '1', 0, 0),
    ('asr', 'as', 'ar', 'r'): (-1, '1', 0, 0),
    ('asr', 'as', 'as', 'ar'): (1, '1', 0, 0),
    ('asr', 'as', 'asr', 'a'): (1, '1', 0, 0),
    ('asr', 'as', 'asr', 'ar'): (1, '1', 0, 1),
    ('asr', 'as', 'asr', 'asr'): (1, '1', 1, 0),
    ('asr', 'as', 'asr', 'r'): (-1, '1', 0, 0),
    ('asr', 'as', 'r', '1'): (1, '1', 0, 0),
    ('asr', 'as', 'r', 'ar'): (-1, '1', 0, 0),
    ('asr', 'as', 'r', 'asr'): (1, '1', 0, 0),
    ('asr', 'as', 'r', 'r'): (-1, '1', 1, 1),
    ('asr', 'asr', '1', '1'): (1, '1', 0, 0),
    ('asr', 'asr', '1', 'ar'): (1, '1', 0, 0),
    ('asr', 'asr', '1', 'asr'): (1, '1', 0, 0),
    ('asr', 'asr', '1', 'r'): (1, '1', 0, 0),
    ('asr', 'asr', 'a', 'a'): (1, '1', 0, 0),
    ('asr', 'asr', 'a', 'ar'): (1, '1', 0, 0),
    ('asr', 'asr', 'a', 'asr'): (-1, '1', 0, 1),
    ('asr', 'asr', 'a', 'r'): (-1, '1', 0, 0),
    ('asr', 'asr', 'ar', '1'): (-1, '1', 0, 0),
    ('asr', 'asr', 'ar', 'a'): (1, '1', 0, 0),
    ('asr', 'asr', 'ar', 'as'): (1, '1', 1, 1),
    ('asr', 'asr', 'as', 'ar'): (-1, '1', 0, 1),
    ('asr', 'asr', 'as', 'as'): (1, '1', 0, 0),
    ('asr', 'asr', 'as', 'asr'): (-1, '1', 1, 0),
    ('asr', 'asr', 'as', 'r'): (1, '1', 0, 0),
    ('asr', 'asr', 'asr', '1'): (1, '1', 0, 0),
    ('asr', 'asr', 'asr', 'a'): (-1, '1', 1, 1),
    ('asr', 'asr', 'asr', 'as'): (-1, '1', 1, 1),
    ('asr', 'asr', 'r', '1'): (-1, '1', 1, 1),
    ('asr', 'asr', 'r', 'a'): (-1, '1', 0, 0),
    ('asr', 'asr', 'r', 'as'): (1, '1', 0, 0),
    ('asr', 'r', '1', 'ar'): (1, '1', 0, 0),
    ('asr', 'r', '1', 'as'): (1, '1', 0, 0),
    ('asr', 'r', '1', 'asr'): (1, '1', 0, 0),
    ('asr', 'r', '1', 'r'): (1, '1', 0, 0),
    ('asr', 'r', 'a', '1'): (1, '1', 0, 0),
    ('asr', 'r', 'a', 'ar'): (1, '1', 0, 0),
    ('asr', 'r', 'a', 'asr'): (1, '1', 0, 0),
    ('asr', 'r', 'a', 'r'): (-1, '1', 0, 1),
    ('asr', 'r', 'ar', '1'): (-1, '1', 1, 0),
    ('asr', 'r', 'ar', 'a'): (1, '1', 0, 0),
    ('asr', 'r', 'ar', 'as'): (1, '1', 0, 0),
    ('asr', 'r', 'as', 'a'): (1, '1', 0, 0),
    ('asr', 'r', 'as', 'ar'): (1, '1', 0, 0),
    ('asr', 'r', 'as', 'asr'): (-1, '1', 1, 0),
    ('asr', 'r', 'as', 'r'): (-1, '1', 0, 0),
    ('asr', 'r', 'asr', '1'): (1, '1', 0, 0),
    ('asr', 'r', 'asr', 'a'): (1, '1', 0, 1),
    ('asr', 'r', 'asr', 'as'): (1, '1', 0, 0),
    ('asr', 'r', 'r', '1'): (1, '1', 0, 0),
    ('asr', 'r', 'r', 'a'): (1, '1', 1, 0),
    ('asr', 'r', 'r', 'as'): (1, '1', 0, 0),
    ('r', '1', '1', 'r'): (1, '1', 0, 0),
    ('r', '1', 'a', 'asr'): (1, '1', 0, 0),
    ('r', '1', 'ar', 'ar'): (1, '1', 0, 0),
    ('r', '1', 'ar', 'as'): (1, '1', 0, 0),
    ('r', '1', 'ar', 'asr'): (1, '1', 0, 0),
    ('r', '1', 'ar', 'r'): (1, '1', 0, 0),
    ('r', '1', 'as', 'ar'): (1, '1', 0, 0),
    ('r', '1', 'asr', 'a'): (1, '1', 0, 0),
    ('r', '1', 'asr', 'ar'): (1, '1', 0, 0),
    ('r', '1', 'asr', 'asr'): (1, '1', 0, 0),
    ('r', '1', 'asr', 'r'): (1, '1', 0, 0),
    ('r', '1', 'r', '1'): (1, '1', 0, 0),
    ('r', '1', 'r', 'ar'): (1, '1', 0, 0),
    ('r', '1', 'r', 'asr'): (1, '1', 0, 0),
    ('r', '1', 'r', 'r'): (1, '1', 0, 0),
    ('r', 'a', '1', 'asr'): (1, '1', 0, 0),
    ('r', 'a', 'a', 'ar'): (1, '1', 0, 0),
    ('r', 'a', 'ar', 'a'): (-1, '1', 1, 0),
    ('r', 'a', 'ar', 'ar'): (-1, '1', 1, 1),
    ('r', 'a', 'ar', 'asr'): (-1, '1', 0, 0),
    ('r', 'a', 'ar', 'r'): (1, '1', 1, 0),
    ('r', 'a', 'as', 'r'): (1, '1', 0, 0),
    ('r', 'a', 'asr', '1'): (1, '1', 0, 0),
    ('r', 'a', 'asr', 'ar'): (-1, '1', 0, 0),
    ('r', 'a', 'asr', 'asr'): (1, '1', 0, 0),
    ('r', 'a', 'asr', 'r'): (-1, '1', 1, 1),
    ('r', 'a', 'r', 'ar'): (-1, '1', 1, 0),
    ('r', 'a', 'r', 'as'): (-1, '1', 0, 0),
    ('r', 'a', 'r', 'asr'): (-1, '1', 0, 0),
    ('r', 'a', 'r', 'r'): (-1, '1', 0, 0),
    ('r', 'ar', '1', 'ar'): (1, '1', 0, 0),
    ('r', 'ar', '1', 'as'): (1, '1', 0, 0),
    ('r', 'ar', '1', 'asr'): (1, '1', 0, 0),
    ('r', 'ar', '1', 'r'): (1, '1', 0, 0),
    ('r', 'ar', 'a', '1'): (1, '1', 0, 0),
    ('r', 'ar', 'a', 'ar'): (-1, '1', 0, 0),
    ('r', 'ar', 'a', 'asr'): (1, '1', 0, 0),
    ('r', 'ar', 'a', 'r'): (1, '1', 0, 0),
    ('r', 'ar', 'ar', '1'): (1, '1', 0, 0),
    ('r', 'ar', 'ar', 'a'): (1, '1', 1, 0),
    ('r', 'ar', 'ar', 'as'): (1, '1', 0, 0),
    ('r', 'ar', 'as', 'a'): (-1, '1', 1, 0),
    ('r', 'ar', 'as', 'ar'): (-1, '1', 1, 1),
    ('r', 'ar', 'as', 'asr'): (1, '1', 0, 0),
    ('r', 'ar', 'as', 'r'): (-1, '1', 1, 0),
    ('r', 'ar', 'asr', '1'): (-1, '1', 0, 0),
    ('r', 'ar', 'asr', 'a'): (1, '1', 0, 0),
    ('r', 'ar', 'asr', 'as'): (1, '1', 1, 0),
    ('r', 'ar', 'r', '1'): (1, '1', 0, 0),
    ('r', 'ar', 'r', 'a'): (1, '1', 1, 0),
    ('r', 'ar', 'r', 'as'): (1, '1', 0, 0),
    ('r', 'as', '1', 'ar'): (1, '1', 0, 0),
    ('r', 'as', 'a', 'r'): (1, '1', 0, 0),
    ('r', 'as', 'ar', '1'): (1, '1', 0, 0),
    ('r', 'as', 'ar', 'ar'): (1, '1', 0, 0),
    ('r', 'as', 'ar', 'asr'): (-1, '1', 0, 0),
    ('r', 'as', 'ar', 'r'): (1, '1', 0, 0),
    ('r', 'as', 'as', 'asr'): (-1, '1', 1, 0),
    ('r', 'as', 'asr', 'ar'): (1, '1', 0, 0),
    ('r', 'as', 'asr', 'as'): (1, '1', 1, 0),
    ('r', 'as', 'asr', 'asr'): (1, '1', 0, 0),
    ('r', 'as', 'asr', 'r'): (-1, '1', 1, 0),
    ('r', 'as', 'r', 'a'): (-1, '1', 0, 0),
    ('r', 'as', 'r', 'ar'): (1, '1', 1, 1),
    ('r', 'as', 'r', 'asr'): (-1, '1', 1, 0),
    ('r', 'as', 'r', 'r'): (1, '1', 0, 0),
    ('r', 'asr', '1', 'a'): (1, '1', 0, 0),
    ('r', 'asr', '1', 'ar'): (1, '1', 0, 0),
    ('r', 'asr', '1', 'asr'): (1, '1', 0, 0),
    ('r', 'asr', '1', 'r'): (1, '1', 0, 0),
    ('r', 'asr', 'a', 'ar'): (1, '1', 0, 0),
    ('r', 'asr', 'a', 'as'): (1, '1', 0, 0),
    ('r', 'asr', 'a', 'asr'): (1, '1', 0, 0),
    ('r', 'asr', 'a', 'r'): (1, '1', 0, 1),
    ('r', 'asr', 'ar', '1'): (1, '1', 1, 1),
    ('r', 'asr', 'ar', 'a'): (1, '1', 1, 0),
    ('r', 'asr', 'ar', 'as'): (1, '1', 0, 0),
    ('r', 'asr', 'as', '1'): (1, '1', 0, 0),
    ('r', 'asr', 'as', 'ar'): (-1, '1', 0, 0),
    ('r', 'asr', 'as', 'asr'): (-1, '1', 1, 1),
    ('r', 'asr', 'as', 'r'): (1, '1', 0, 0),
    ('r', 'asr', 'asr', '1'): (-1, '1', 1, 1),
    ('r', 'asr', 'asr', 'a'): (1, '1', 0, 0),
    ('r', 'asr', 'asr', 'as'): (1, '1', 0, 1),
    ('r', 'asr', 'r', '1'): (1, '1', 0, 0),
    ('r', 'asr', 'r', 'a'): (-1, '1', 1, 1),
    ('r', 'asr', 'r', 'as'): (1, '1', 1, 0),
    ('r', 'r', '1', '1'): (1, '1', 0, 0),
    ('r', 'r', '1', 'ar'): (1, '1', 0, 0),
    ('r', 'r', '1', 'asr'): (1, '1', 0, 0),
    ('r', 'r', '1', 'r'): (1, '1', 0, 0),
    ('r', 'r', 'a', 'a'): (1, '1', 0, 0),
    ('r', 'r', 'a', 'ar'): (1, '1', 0, 1),
    ('r', 'r', 'a', 'asr'): (1, '1', 0, 0),
    ('r', 'r', 'a', 'r'): (-1, '1', 0, 0),
    ('r', 'r', 'ar', '1'): (1, '1', 0, 0),
    ('r', 'r', 'ar', 'a'): (1, '1', 0, 0),
    ('r', 'r', 'ar', 'as'): (1, '1', 0, 0),
    ('r', 'r', 'as', 'ar'): (1, '1', 0, 0),
    ('r', 'r', 'as', 'as'): (1, '1', 0, 0),
    ('r', 'r', 'as', 'asr'): (1, '1', 1, 0),
    ('r', 'r', 'as', 'r'): (1, '1', 0, 0),
    ('r', 'r', 'asr', '1'): (1, '1', 0, 0),
    ('r', 'r', 'asr', 'a'): (1, '1', 0, 0),
    ('r', 'r', 'asr', 'as'): (-1, '1', 1, 1),
    ('r', 'r', 'r', '1'): (1, '1', 0, 0),
    ('r', 'r', 'r', 'a'): (1, '1', 0, 0),
    ('r', 'r', 'r', 'as'): (-1, '1', 0, 0),
}

BLOCKS = {
    ('ar', 'ar', 'ar', 'ar'): (
        ('1', 'r', 'ar', 'asr'),
        ('1', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (1, 'sA', 0, 0), (-1, 'sA', 1, 0), (-1, 'sA', 1, 0)),
            ((1, 'sA', 0, 0), (1, 'D+', 0, 0), (-1, 'D-', 1, 0), (1, 'B', 1, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D-', 1, 0), (-1, 'B', 0, 0), (1, 'D+', 0, 0)),
            ((-1, 'sA', 1, 0), (1, 'B', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
        ),
    ),
    ('ar', 'ar', 'ar', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'D-', 1, 0), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((-1, 'D+', 1, 0), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
        ),
    ),
    ('ar', 'ar', 'ar', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'C', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
        ),
    ),
    ('ar', 'ar', 'asr', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 1, 1), (-1, 'C', 1, 0), (-1, 'D+', 1, 0)),
            ((-1, 'C', 0, 1), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((-1, 'D+', 0, 1), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
        ),
    ),
    ('ar', 'ar', 'asr', 'asr'): (
        ('as', 'r', 'ar', 'asr'),
        ('1', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (1, 'sA', 0, 0), (-1, 'sA', 1, 0), (-1, 'sA', 1, 0)),
            ((-1, 'sA', 1, 0), (1, 'B', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D+', 1, 0), (1, 'D-', 0, 0), (-1, 'B', 0, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D-', 1, 0), (-1, 'B', 0, 0), (1, 'D+', 0, 0)),
        ),
    ),
    ('ar', 'ar', 'asr', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (1, 'C', 1, 1)),
            ((1, 'D-', 0, 0), (1, 'C', 0, 0), (1, 'D+', 1, 1)),
            ((1, 'C', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 1, 1)),
        ),
    ),
    ('ar', 'ar', 'r', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'C', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 1, 0)),
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (1, 'C', 1, 0)),
            ((-1, 'D-', 1, 0), (-1, 'C', 1, 0), (-1, 'D+', 0, 0)),
        ),
    ),
    ('ar', 'ar', 'r', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 1, 0), (1, 'D-', 0, 0), (-1, 'C', 1, 0)),
            ((-1, 'D-', 0, 0), (-1, 'C', 1, 0), (1, 'D+', 0, 0)),
            ((1, 'C', 1, 0), (1, 'D+', 0, 0), (-1, 'D-', 1, 0)),
        ),
    ),
    ('ar', 'ar', 'r', 'r'): (
        ('a', 'r', 'ar', 'asr'),
        ('1', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (1, 'sA', 0, 0), (-1, 'sA', 1, 0), (-1, 'sA', 1, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D-', 1, 0), (-1, 'B', 0, 0), (1, 'D+', 0, 0)),
            ((1, 'sA', 0, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0), (-1, 'D-', 1, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D+', 1, 0), (1, 'D-', 0, 0), (-1, 'B', 0, 0)),
        ),
    ),
    ('ar', 'asr', 'ar', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 0, 0), (-1, 'C', 1, 0), (-1, 'D+', 1, 0)),
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((-1, 'D+', 1, 0), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
        ),
    ),
    ('ar', 'asr', 'ar', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((-1, 'D+', 1, 0), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
            ((-1, 'D-', 1, 0), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
        ),
    ),
    ('ar', 'asr', 'ar', 'r'): (
        ('a', 'r', 'ar', 'asr'),
        ('as', 'r', 'ar', 'asr'),
        (
            ((-1, 'A', 0, 0), (-1, 'sA', 1, 0), (-1, 'sA', 1, 0), (-1, 'sA', 1, 0)),
            ((1, 'sA', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0), (-1, 'B', 0, 0)),
            ((1, 'sA', 1, 0), (1, 'D-', 0, 0), (-1, 'B', 0, 0), (1, 'D+', 0, 0)),
            ((1, 'sA', 1, 0), (-1, 'B', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
        ),
    ),
    ('ar', 'asr', 'asr', 'ar'): (
        ('1', 'r', 'ar', 'asr'),
        ('as', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (-1, 'sA', 1, 1), (1, 'sA', 1, 0), (1, 'sA', 1, 0)),
            ((-1, 'sA', 1, 1), (-1, 'B', 0, 0), (-1, 'D+', 0, 1), (-1, 'D-', 0, 1)),
            ((1, 'sA', 1, 0), (-1, 'D+', 0, 1), (1, 'D-', 0, 0), (-1, 'B', 0, 0)),
            ((1, 'sA', 1, 0), (-1, 'D-', 0, 1), (-1, 'B', 0, 0), (1, 'D+', 0, 0)),
        ),
    ),
    ('ar', 'asr', 'asr', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'D+', 0, 1), (1, 'D-', 1, 1), (1, 'C', 1, 1)),
            ((-1, 'D-', 1, 0), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
        ),
    ),
    ('ar', 'asr', 'asr', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 1, 1), (1, 'C', 1, 1), (1, 'D+', 0, 0)),
            ((1, 'C', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 1, 1)),
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (1, 'C', 1, 1)),
        ),
    ),
    ('ar', 'asr', 'r', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (1, 'C', 1, 0)),
            ((1, 'D-', 1, 0), (1, 'C', 1, 0), (1, 'D+', 0, 0)),
            ((1, 'C', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 1, 0)),
        ),
    ),
    ('ar', 'asr', 'r', 'asr'): (
        ('as', 'r', 'ar', 'asr'),
        ('as', 'r', 'ar', 'asr'),
        (
            ((-1, 'A', 1, 0), (1, 'sA', 0, 0), (1, 'sA', 1, 0), (-1, 'sA', 0, 0)),
            ((-1, 'sA', 0, 0), (1, 'D-', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0)),
            ((1, 'sA', 0, 0), (1, 'B', 1, 0), (-1, 'D+', 0, 0), (1, 'D-', 1, 0)),
            ((1, 'sA', 1, 0), (-1, 'D+', 0, 0), (-1, 'D-', 1, 0), (-1, 'B', 0, 0)),
        ),
    ),
    ('ar', 'asr', 'r', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 1, 0), (-1, 'D-', 0, 0), (-1, 'C', 0, 0)),
            ((1, 'D-', 0, 0), (-1, 'C', 1, 0), (-1, 'D+', 1, 0)),
        ),
    ),
    ('ar', 'r', 'ar', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'C', 0, 0), (1, 'D+', 0, 0), (-1, 'D-', 1, 0)),
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (-1, 'C', 1, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 0, 0), (-1, 'D+', 1, 0)),
        ),
    ),
    ('ar', 'r', 'ar', 'asr'): (
        ('as', 'r', 'ar', 'asr'),
        ('a', 'r', 'ar', 'asr'),
        (
            ((-1, 'A', 0, 0), (-1, 'sA', 0, 0), (-1, 'sA', 0, 0), (1, 'sA', 1, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D+', 1, 0), (-1, 'D-', 1, 0), (-1, 'B', 0, 0)),
            ((1, 'sA', 0, 0), (1, 'D-', 0, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0)),
            ((1, 'sA', 0, 0), (-1, 'B', 0, 0), (1, 'D+', 0, 0), (-1, 'D-', 1, 0)),
        ),
    ),
    ('ar', 'r', 'ar', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 0, 0), (-1, 'C', 1, 0), (1, 'D+', 0, 0)),
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (-1, 'D-', 1, 0)),
            ((-1, 'D+', 1, 0), (1, 'D-', 0, 0), (-1, 'C', 1, 0)),
        ),
    ),
    ('ar', 'r', 'asr', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 1, 1), (1, 'D-', 0, 0), (-1, 'C', 1, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 1, 1), (-1, 'D+', 0, 1)),
            ((1, 'C', 1, 1), (1, 'D+', 0, 0), (-1, 'D-', 1, 0)),
        ),
    ),
    ('ar', 'r', 'asr', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'D-', 1, 0), (-1, 'C', 1, 0), (1, 'D+', 0, 0)),
            ((1, 'C', 1, 1), (1, 'D+', 1, 1), (-1, 'D-', 0, 1)),
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (-1, 'C', 1, 0)),
        ),
    ),
    ('ar', 'r', 'asr', 'r'): (
        ('a', 'r', 'ar', 'asr'),
        ('a', 'r', 'ar', 'asr'),
        (
            ((-1, 'A', 0, 0), (1, 'sA', 1, 0), (-1, 'sA', 0, 0), (1, 'sA', 0, 1)),
            ((-1, 'sA', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0), (1, 'D-', 1, 1)),
            ((1, 'sA', 1, 1), (-1, 'D+', 0, 1), (1, 'D-', 1, 1), (1, 'B', 1, 0)),
            ((1, 'sA', 0, 0), (-1, 'D-', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 0, 1)),
        ),
    ),
    ('ar', 'r', 'r', 'ar'): (
        ('1', 'r', 'ar', 'asr'),
        ('a', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (-1, 'sA', 1, 0), (1, 'sA', 0, 0), (-1, 'sA', 0, 0)),
            ((1, 'sA', 0, 0), (-1, 'D-', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 0, 0)),
            ((-1, 'sA', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0), (1, 'D-', 1, 0)),
            ((1, 'sA', 1, 0), (-1, 'D+', 0, 0), (1, 'D-', 1, 0), (1, 'B', 1, 0)),
        ),
    ),
    ('ar', 'r', 'r', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'C', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((-1, 'D+', 0, 0), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
            ((1, 'D-', 0, 0), (-1, 'C', 0, 0), (-1, 'D+', 0, 0)),
        ),
    ),
    ('ar', 'r', 'r', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (-1, 'C', 1, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 0, 0), (-1, 'D+', 1, 0)),
            ((-1, 'C', 0, 0), (-1, 'D+', 0, 0), (1, 'D-', 1, 0)),
        ),
    ),
    ('asr', 'ar', 'ar', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 1, 0), (-1, 'C', 0, 0), (-1, 'D+', 0, 0)),
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((-1, 'D+', 1, 0), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
        ),
    ),
    ('asr', 'ar', 'ar', 'asr'): (
        ('1', 'r', 'ar', 'asr'),
        ('a', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (1, 'sA', 0, 0), (-1, 'sA', 1, 0), (-1, 'sA', 1, 0)),
            ((1, 'sA', 0, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0), (-1, 'D-', 1, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D+', 1, 0), (1, 'D-', 0, 0), (-1, 'B', 0, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D-', 1, 0), (-1, 'B', 0, 0), (1, 'D+', 0, 0)),
        ),
    ),
    ('asr', 'ar', 'ar', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
            ((1, 'C', 1, 1), (1, 'D+', 1, 1), (1, 'D-', 1, 1)),
        ),
    ),
    ('asr', 'ar', 'asr', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'C', 0, 1), (-1, 'D+', 0, 0), (-1, 'D-', 0, 0)),
            ((-1, 'D+', 0, 1), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
            ((-1, 'D-', 0, 1), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
        ),
    ),
    ('asr', 'ar', 'asr', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 0), (-1, 'D-', 1, 0), (-1, 'C', 1, 0)),
            ((-1, 'D-', 1, 0), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
        ),
    ),
    ('asr', 'ar', 'asr', 'r'): (
        ('as', 'r', 'ar', 'asr'),
        ('a', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (-1, 'sA', 1, 0), (-1, 'sA', 1, 0), (-1, 'sA', 0, 1)),
            ((-1, 'sA', 1, 0), (1, 'D-', 0, 0), (-1, 'B', 0, 0), (1, 'D+', 1, 1)),
            ((-1, 'sA', 1, 0), (-1, 'B', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 1, 1)),
            ((-1, 'sA', 0, 1), (1, 'D+', 1, 1), (1, 'D-', 1, 1), (-1, 'B', 0, 0)),
        ),
    ),
    ('asr', 'ar', 'r', 'ar'): (
        ('a', 'r', 'ar', 'asr'),
        ('a', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 1, 0), (-1, 'sA', 0, 0), (-1, 'sA', 0, 0), (-1, 'sA', 1, 0)),
            ((-1, 'sA', 0, 0), (1, 'D+', 1, 0), (1, 'D-', 1, 0), (-1, 'B', 0, 0)),
            ((-1, 'sA', 1, 0), (1, 'D-', 0, 0), (-1, 'B', 0, 0), (1, 'D+', 1, 0)),
            ((1, 'sA', 0, 0), (1, 'B', 1, 0), (-1, 'D+', 1, 0), (-1, 'D-', 0, 0)),
        ),
    ),
    ('asr', 'ar', 'r', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'D-', 0, 0), (-1, 'C', 1, 0), (1, 'D+', 0, 0)),
            ((-1, 'C', 0, 0), (-1, 'D+', 1, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 1, 0), (1, 'D-', 0, 0), (-1, 'C', 1, 0)),
        ),
    ),
    ('asr', 'ar', 'r', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (-1, 'D-', 1, 0), (-1, 'C', 1, 0)),
            ((-1, 'D-', 0, 1), (1, 'C', 1, 1), (1, 'D+', 1, 1)),
        ),
    ),
    ('asr', 'asr', 'ar', 'ar'): (
        ('a', 'r', 'ar', 'asr'),
        ('1', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (-1, 'sA', 1, 1), (1, 'sA', 1, 0), (1, 'sA', 1, 0)),
            ((-1, 'sA', 1, 0), (-1, 'B', 0, 1), (-1, 'D+', 0, 0), (-1, 'D-', 0, 0)),
            ((1, 'sA', 1, 0), (-1, 'D+', 0, 1), (1, 'D-', 0, 0), (-1, 'B', 0, 0)),
            ((1, 'sA', 1, 0), (-1, 'D-', 0, 1), (-1, 'B', 0, 0), (1, 'D+', 0, 0)),
        ),
    ),
    ('asr', 'asr', 'ar', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 1, 1), (-1, 'D-', 1, 0), (-1, 'C', 1, 0)),
            ((-1, 'D-', 0, 1), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
            ((-1, 'C', 0, 1), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
        ),
    ),
    ('asr', 'asr', 'ar', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 1, 1), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
            ((1, 'C', 1, 1), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (1, 'D-', 1, 1), (1, 'C', 1, 1)),
        ),
    ),
    ('asr', 'asr', 'asr', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 1), (-1, 'D-', 1, 1), (-1, 'C', 1, 1)),
            ((-1, 'D-', 1, 0), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
        ),
    ),
    ('asr', 'asr', 'asr', 'asr'): (
        ('1', 'r', 'ar', 'asr'),
        ('1', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (-1, 'sA', 1, 1), (1, 'sA', 1, 0), (1, 'sA', 1, 0)),
            ((-1, 'sA', 1, 1), (1, 'D-', 0, 0), (1, 'B', 0, 1), (-1, 'D+', 0, 1)),
            ((1, 'sA', 1, 0), (1, 'B', 0, 1), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((1, 'sA', 1, 0), (-1, 'D+', 0, 1), (1, 'D-', 0, 0), (-1, 'B', 0, 0)),
        ),
    ),
    ('asr', 'asr', 'asr', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'C', 0, 0), (1, 'D+', 1, 1), (1, 'D-', 0, 0)),
            ((1, 'D+', 1, 1), (1, 'D-', 0, 0), (1, 'C', 1, 1)),
            ((1, 'D-', 0, 0), (1, 'C', 1, 1), (1, 'D+', 0, 0)),
        ),
    ),
    ('asr', 'asr', 'r', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 0, 1), (1, 'C', 1, 0), (1, 'D+', 0, 0)),
            ((1, 'C', 0, 1), (1, 'D+', 1, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 1, 1), (1, 'D-', 0, 0), (1, 'C', 1, 0)),
        ),
    ),
    ('asr', 'asr', 'r', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'C', 1, 1), (-1, 'D+', 1, 0), (1, 'D-', 0, 0)),
            ((-1, 'D+', 0, 1), (-1, 'D-', 0, 0), (1, 'C', 1, 0)),
            ((-1, 'D-', 1, 1), (-1, 'C', 1, 0), (1, 'D+', 0, 0)),
        ),
    ),
    ('asr', 'asr', 'r', 'r'): (
        ('as', 'r', 'ar', 'asr'),
        ('1', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (-1, 'sA', 1, 1), (1, 'sA', 1, 0), (1, 'sA', 1, 0)),
            ((1, 'sA', 1, 0), (-1, 'D+', 0, 1), (1, 'D-', 0, 0), (-1, 'B', 0, 0)),
            ((-1, 'sA', 1, 0), (1, 'D-', 0, 1), (1, 'B', 0, 0), (-1, 'D+', 0, 0)),
            ((-1, 'sA', 1, 1), (-1, 'B', 0, 0), (-1, 'D+', 0, 1), (-1, 'D-', 0, 1)),
        ),
    ),
    ('asr', 'r', 'ar', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 1, 0), (1, 'D-', 0, 0), (1, 'C', 1, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 1, 0), (1, 'D+', 0, 0)),
            ((1, 'C', 0, 0), (1, 'D+', 1, 0), (1, 'D-', 0, 0)),
        ),
    ),
    ('asr', 'r', 'ar', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 0, 0), (1, 'C', 1, 0), (1, 'D+', 0, 0)),
            ((1, 'C', 0, 0), (1, 'D+', 1, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (1, 'D-', 1, 0), (1, 'C', 0, 0)),
        ),
    ),
    ('asr', 'r', 'ar', 'r'): (
        ('as', 'r', 'ar', 'asr'),
        ('as', 'r', 'ar', 'asr'),
        (
            ((-1, 'A', 0, 0), (1, 'sA', 1, 0), (-1, 'sA', 1, 0), (-1, 'sA', 0, 0)),
            ((-1, 'sA', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 0, 0), (-1, 'D-', 1, 0)),
            ((1, 'sA', 0, 0), (-1, 'D+', 1, 0), (1, 'D-', 1, 0), (-1, 'B', 0, 0)),
            ((1, 'sA', 1, 1), (-1, 'D-', 0, 1), (-1, 'B', 0, 1), (1, 'D+', 1, 1)),
        ),
    ),
    ('asr', 'r', 'asr', 'ar'): (
        ('a', 'r', 'ar', 'asr'),
        ('as', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (1, 'sA', 1, 1), (1, 'sA', 1, 0), (1, 'sA', 0, 0)),
            ((1, 'sA', 1, 0), (1, 'D-', 0, 1), (-1, 'B', 0, 0), (1, 'D+', 1, 0)),
            ((1, 'sA', 1, 1), (-1, 'B', 0, 0), (1, 'D+', 0, 1), (1, 'D-', 1, 1)),
            ((1, 'sA', 0, 0), (1, 'D+', 1, 1), (1, 'D-', 1, 0), (-1, 'B', 0, 0)),
        ),
    ),
    ('asr', 'r', 'asr', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'C', 0, 0), (1, 'D+', 1, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 1, 1), (1, 'D-', 0, 1), (1, 'C', 1, 1)),
            ((1, 'D-', 0, 0), (1, 'C', 1, 0), (1, 'D+', 0, 0)),
        ),
    ),
    ('asr', 'r', 'asr', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 0), (-1, 'D-', 0, 0), (-1, 'C', 0, 1)),
            ((-1, 'D-', 0, 1), (1, 'C', 0, 1), (1, 'D+', 0, 0)),
            ((-1, 'C', 0, 1), (1, 'D+', 0, 1), (1, 'D-', 0, 0)),
        ),
    ),
    ('asr', 'r', 'r', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'C', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (-1, 'D-', 0, 0), (-1, 'C', 0, 0)),
            ((-1, 'D-', 0, 0), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
        ),
    ),
    ('asr', 'r', 'r', 'asr'): (
        ('1', 'r', 'ar', 'asr'),
        ('as', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (1, 'sA', 1, 0), (-1, 'sA', 0, 0), (1, 'sA', 0, 0)),
            ((1, 'sA', 0, 0), (1, 'D+', 1, 0), (-1, 'D-', 0, 0), (-1, 'B', 0, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D-', 0, 0), (-1, 'B', 1, 0), (-1, 'D+', 1, 0)),
            ((1, 'sA', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0), (1, 'D-', 1, 0)),
        ),
    ),
    ('asr', 'r', 'r', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 0, 0), (1, 'C', 1, 0), (1, 'D+', 0, 0)),
            ((1, 'C', 0, 0), (1, 'D+', 1, 0), (1, 'D-', 0, 0)),
            ((-1, 'D+', 1, 1), (-1, 'D-', 0, 1), (-1, 'C', 1, 1)),
        ),
    ),
    ('r', 'ar', 'ar', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'C', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
            ((1, 'D-', 1, 1), (1, 'C', 1, 1), (1, 'D+', 1, 1)),
        ),
    ),
    ('r', 'ar', 'ar', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'D+', 0, 0), (-1, 'D-', 0, 0), (-1, 'C', 0, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
            ((1, 'C', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
        ),
    ),
    ('r', 'ar', 'ar', 'r'): (
        ('1', 'r', 'ar', 'asr'),
        ('as', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (-1, 'sA', 1, 0), (1, 'sA', 0, 0), (1, 'sA', 0, 0)),
            ((1, 'sA', 0, 0), (-1, 'D-', 1, 0), (-1, 'B', 0, 0), (1, 'D+', 0, 0)),
            ((-1, 'sA', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0), (-1, 'D-', 1, 0)),
            ((-1, 'sA', 1, 0), (1, 'D+', 0, 0), (-1, 'D-', 1, 0), (1, 'B', 1, 0)),
        ),
    ),
    ('r', 'ar', 'asr', 'ar'): (
        ('as', 'r', 'ar', 'asr'),
        ('as', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 1, 0), (1, 'sA', 0, 1), (1, 'sA', 1, 0), (1, 'sA', 1, 0)),
            ((1, 'sA', 0, 0), (1, 'D+', 1, 1), (1, 'D-', 0, 0), (-1, 'B', 0, 0)),
            ((1, 'sA', 0, 0), (1, 'D-', 1, 1), (-1, 'B', 0, 0), (1, 'D+', 0, 0)),
            ((1, 'sA', 1, 1), (-1, 'B', 0, 0), (1, 'D+', 1, 1), (1, 'D-', 1, 1)),
        ),
    ),
    ('r', 'ar', 'asr', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'D-', 0, 0), (-1, 'C', 0, 0), (-1, 'D+', 0, 0)),
            ((1, 'C', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
        ),
    ),
    ('r', 'ar', 'asr', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 1, 1)),
            ((1, 'D+', 0, 0), (-1, 'D-', 1, 0), (-1, 'C', 0, 1)),
            ((1, 'D-', 0, 0), (-1, 'C', 1, 0), (-1, 'D+', 0, 1)),
        ),
    ),
    ('r', 'ar', 'r', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 0, 0), (-1, 'C', 1, 0), (-1, 'D+', 0, 0)),
            ((-1, 'C', 1, 0), (1, 'D+', 0, 0), (1, 'D-', 1, 0)),
            ((1, 'D+', 1, 1), (-1, 'D-', 0, 1), (-1, 'C', 1, 1)),
        ),
    ),
    ('r', 'ar', 'r', 'asr'): (
        ('a', 'r', 'ar', 'asr'),
        ('as', 'r', 'ar', 'asr'),
        (
            ((-1, 'A', 0, 0), (-1, 'sA', 1, 0), (1, 'sA', 1, 0), (-1, 'sA', 0, 0)),
            ((1, 'sA', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 0, 0), (1, 'D-', 1, 0)),
            ((1, 'sA', 0, 0), (1, 'D+', 1, 0), (-1, 'D-', 1, 0), (-1, 'B', 0, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D-', 0, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0)),
        ),
    ),
    ('r', 'ar', 'r', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (1, 'C', 0, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 0, 0), (1, 'D+', 0, 0)),
            ((-1, 'C', 1, 0), (-1, 'D+', 1, 0), (-1, 'D-', 1, 0)),
        ),
    ),
    ('r', 'asr', 'ar', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 0), (1, 'D-', 1, 1), (1, 'C', 0, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 1, 1), (1, 'D+', 0, 0)),
            ((1, 'C', 1, 1), (1, 'D+', 0, 0), (1, 'D-', 1, 1)),
        ),
    ),
    ('r', 'asr', 'ar', 'asr'): (
        ('a', 'r', 'ar', 'asr'),
        ('a', 'r', 'ar', 'asr'),
        (
            ((-1, 'A', 1, 0), (1, 'sA', 1, 0), (1, 'sA', 0, 1), (1, 'sA', 1, 0)),
            ((1, 'sA', 0, 0), (-1, 'D-', 0, 0), (1, 'B', 1, 1), (-1, 'D+', 0, 0)),
            ((-1, 'sA', 0, 0), (-1, 'B', 0, 0), (1, 'D+', 1, 1), (1, 'D-', 0, 0)),
            ((-1, 'sA', 0, 0), (1, 'D+', 0, 0), (1, 'D-', 1, 1), (-1, 'B', 0, 0)),
        ),
    ),
    ('r', 'asr', 'ar', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'C', 1, 0), (1, 'D+', 1, 1), (1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (-1, 'D-', 0, 1), (-1, 'C', 1, 0)),
            ((1, 'D-', 0, 0), (-1, 'C', 0, 1), (-1, 'D+', 1, 0)),
        ),
    ),
    ('r', 'asr', 'asr', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 0, 0), (1, 'C', 0, 0), (1, 'D+', 1, 1)),
            ((1, 'C', 1, 1), (1, 'D+', 1, 1), (1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (1, 'C', 1, 1)),
        ),
    ),
    ('r', 'asr', 'asr', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'C', 1, 1), (-1, 'D+', 0, 0), (-1, 'D-', 1, 1)),
            ((1, 'D+', 0, 0), (1, 'D-', 1, 1), (1, 'C', 0, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 1, 1), (1, 'D+', 0, 0)),
        ),
    ),
    ('r', 'asr', 'asr', 'r'): (
        ('1', 'r', 'ar', 'asr'),
        ('a', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (1, 'sA', 1, 0), (-1, 'sA', 1, 1), (-1, 'sA', 1, 1)),
            ((-1, 'sA', 1, 1), (-1, 'D+', 0, 1), (1, 'D-', 0, 0), (-1, 'B', 0, 0)),
            ((1, 'sA', 1, 0), (1, 'D-', 0, 0), (1, 'B', 0, 1), (-1, 'D+', 0, 1)),
            ((1, 'sA', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 0, 1), (-1, 'D-', 0, 1)),
        ),
    ),
    ('r', 'asr', 'r', 'ar'): (
        ('as', 'r', 'ar', 'asr'),
        ('a', 'r', 'ar', 'asr'),
        (
            ((-1, 'A', 0, 0), (-1, 'sA', 1, 0), (1, 'sA', 1, 1), (1, 'sA', 1, 0)),
            ((1, 'sA', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 0, 1), (-1, 'D-', 0, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D+', 0, 0), (1, 'D-', 0, 1), (-1, 'B', 0, 0)),
            ((-1, 'sA', 1, 1), (-1, 'D-', 0, 1), (-1, 'B', 0, 0), (1, 'D+', 0, 1)),
        ),
    ),
    ('r', 'asr', 'r', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 0), (-1, 'D-', 1, 1), (1, 'C', 1, 0)),
            ((1, 'D-', 0, 0), (-1, 'C', 1, 1), (1, 'D+', 1, 0)),
            ((1, 'C', 1, 0), (-1, 'D+', 0, 1), (1, 'D-', 0, 0)),
        ),
    ),
    ('r', 'asr', 'r', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 0, 0), (1, 'C', 1, 1), (1, 'D+', 0, 0)),
            ((1, 'C', 1, 0), (1, 'D+', 0, 1), (1, 'D-', 1, 0)),
            ((1, 'D+', 0, 0), (1, 'D-', 1, 1), (1, 'C', 0, 0)),
        ),
    ),
    ('r', 'r', 'ar', 'ar'): (
        ('as', 'r', 'ar', 'asr'),
        ('1', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (1, 'sA', 0, 0), (-1, 'sA', 1, 0), (1, 'sA', 1, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D-', 1, 0), (-1, 'B', 0, 0), (-1, 'D+', 0, 0)),
            ((1, 'sA', 0, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0), (1, 'D-', 1, 0)),
            ((1, 'sA', 1, 1), (1, 'D+', 1, 1), (-1, 'D-', 0, 1), (-1, 'B', 0, 1)),
        ),
    ),
    ('r', 'r', 'ar', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'C', 1, 0), (-1, 'D+', 0, 0), (1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (-1, 'D-', 1, 0), (1, 'C', 1, 0)),
            ((1, 'D-', 0, 0), (-1, 'C', 1, 0), (1, 'D+', 1, 0)),
        ),
    ),
    ('r', 'r', 'ar', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (-1, 'C', 0, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 0, 0), (-1, 'D+', 0, 0)),
            ((1, 'C', 0, 0), (1, 'D+', 0, 0), (-1, 'D-', 0, 0)),
        ),
    ),
    ('r', 'r', 'asr', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((-1, 'C', 0, 1), (1, 'D+', 0, 0), (-1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (-1, 'D-', 0, 1), (1, 'C', 0, 1)),
            ((1, 'D-', 0, 0), (-1, 'C', 0, 1), (1, 'D+', 0, 1)),
        ),
    ),
    ('r', 'r', 'asr', 'asr'): (
        ('a', 'r', 'ar', 'asr'),
        ('1', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (1, 'sA', 0, 0), (-1, 'sA', 1, 0), (1, 'sA', 1, 0)),
            ((1, 'sA', 1, 0), (1, 'D+', 1, 0), (-1, 'D-', 0, 0), (-1, 'B', 0, 0)),
            ((1, 'sA', 1, 1), (1, 'D-', 1, 1), (1, 'B', 0, 1), (1, 'D+', 0, 1)),
            ((1, 'sA', 0, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0), (1, 'D-', 1, 0)),
        ),
    ),
    ('r', 'r', 'asr', 'r'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 0, 0), (1, 'C', 0, 0), (-1, 'D+', 1, 1)),
            ((1, 'C', 1, 1), (1, 'D+', 1, 1), (-1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (-1, 'C', 1, 1)),
        ),
    ),
    ('r', 'r', 'r', 'ar'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D+', 0, 0), (1, 'D-', 0, 0), (-1, 'C', 1, 0)),
            ((1, 'D-', 0, 0), (1, 'C', 0, 0), (-1, 'D+', 1, 0)),
            ((-1, 'C', 1, 1), (-1, 'D+', 1, 1), (1, 'D-', 0, 1)),
        ),
    ),
    ('r', 'r', 'r', 'asr'): (
        ('r', 'ar', 'asr'),
        ('r', 'ar', 'asr'),
        (
            ((1, 'D-', 0, 0), (1, 'C', 1, 0), (1, 'D+', 0, 0)),
            ((-1, 'C', 0, 0), (-1, 'D+', 1, 0), (-1, 'D-', 0, 0)),
            ((1, 'D+', 0, 0), (1, 'D-', 1, 0), (1, 'C', 0, 0)),
        ),
    ),
    ('r', 'r', 'r', 'r'): (
        ('1', 'r', 'ar', 'asr'),
        ('1', 'r', 'ar', 'asr'),
        (
            ((1, 'A', 0, 0), (1, 'sA', 0, 0), (-1, 'sA', 1, 0), (1, 'sA', 1, 0)),
            ((1, 'sA', 0, 0), (-1, 'B', 0, 0), (-1, 'D+', 1, 0), (1, 'D-', 1, 0)),
            ((-1, 'sA', 1, 0), (-1, 'D+', 1, 0), (1, 'D-', 0, 0), (1, 'B', 0, 0)),
            ((1, 'sA', 1, 0), (1, 'D-', 1, 0), (1, 'B', 0, 0), (1, 'D+', 0, 0)),
        ),
    ),
}
