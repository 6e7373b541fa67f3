"""Blocks of the two 18-element examples, in product-of-chains coordinates."""

# firefly algebra: A ≅ 2 x 2 x 3 over (a, b, c), B ≅ 3 x 2 x 2 over (c, d, e)
L18_BLOCKS = [
    ((1, 1, 2), {
        "0": (0, 0, 0), "a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1),
        "a+c": (1, 0, 1), "b+c": (0, 1, 1), "c+c": (0, 0, 2),
        "a'": (0, 1, 2), "b'": (1, 0, 2), "(c+c)'": (1, 1, 0), "c'": (1, 1, 1),
        "1": (1, 1, 2),
    }),
    ((2, 1, 1), {
        "0": (0, 0, 0), "c": (1, 0, 0), "d": (0, 1, 0), "e": (0, 0, 1),
        "c+c": (2, 0, 0), "c+d": (1, 1, 0), "c+e": (1, 0, 1),
        "d'": (2, 0, 1), "e'": (2, 1, 0), "(c+c)'": (0, 1, 1), "c'": (1, 1, 1),
        "1": (2, 1, 1),
    }),
]

# B1 ≅ 2^3 over (a, b, c), B2 ≅ 2^3 over (e, f, a), B3 ≅ 2 x 3 x 2 over (c, d, e)
GEN18_BLOCKS = [
    ((1, 1, 1), {
        "0": (0, 0, 0), "a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1),
        "c'": (1, 1, 0), "b'": (1, 0, 1), "a'": (0, 1, 1), "1": (1, 1, 1),
    }),
    ((1, 1, 1), {
        "0": (0, 0, 0), "e": (1, 0, 0), "f": (0, 1, 0), "a": (0, 0, 1),
        "a'": (1, 1, 0), "f'": (1, 0, 1), "e'": (0, 1, 1), "1": (1, 1, 1),
    }),
    ((1, 2, 1), {
        "0": (0, 0, 0), "c": (1, 0, 0), "d": (0, 1, 0), "e": (0, 0, 1),
        "d+d": (0, 2, 0), "d+e": (0, 1, 1), "c+d": (1, 1, 0), "(d+d)'": (1, 0, 1),
        "c'": (0, 2, 1), "d'": (1, 1, 1), "e'": (1, 2, 0), "1": (1, 2, 1),
    }),
]

L18_A = {"0", "a", "b", "c", "a+c", "b+c", "c+c", "a'", "b'", "(c+c)'", "c'", "1"}
L18_B = {"0", "c", "d", "e", "c+c", "c+d", "c+e", "d'", "e'", "(c+c)'", "c'", "1"}
GEN18_B1 = {"0", "a", "b", "c", "a'", "b'", "c'", "1"}
GEN18_B2 = {"0", "e", "f", "a", "e'", "f'", "a'", "1"}
GEN18_B3 = {"0", "c", "d", "e", "d+d", "d+e", "c+d", "(d+d)'", "c'", "d'", "e'", "1"}
