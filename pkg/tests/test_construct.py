from itertools import combinations

import pytest

from effectalg import structure as st
from effectalg.catalog import boolean, chain, gen18, l18, mo, r6, trivial
from effectalg.construct import (ENUMERATION_CAP, all_subalgebras, direct_product, enumerate_all,
                                 generated_subalgebra, horizontal_sum, interval_algebra)
from effectalg.core import find_isomorphism, from_table, is_isomorphic, is_sub_effect_algebra

from oracles import naive_tables


def test_product_unit_law():
    for E in (chain(2), r6(), boolean(2)):
        assert is_isomorphic(direct_product(E, trivial()), E)
        assert is_isomorphic(direct_product(trivial(), E), E)


def test_product_of_booleans():
    P = direct_product(boolean(1), boolean(1))
    assert is_isomorphic(P, boolean(2))
    assert P.names == ("0|0", "0|1", "1|0", "1|1")


def test_product_componentwise():
    E, F = chain(2), boolean(2)
    P = direct_product(E, F)
    assert len(P) == len(E) * len(F)
    for x in P.names:
        for y in P.names:
            x1, x2 = x.split("|")
            y1, y2 = y.split("|")
            s1, s2 = E.sum(E.id(x1), E.id(y1)), F.sum(F.id(x2), F.id(y2))
            s = P.sum(P.id(x), P.id(y))
            if s1 is None or s2 is None:
                assert s is None
            else:
                assert P.names[s] == f"{E.names[s1]}|{F.names[s2]}"


def test_product_with_non_homogeneous_factor():
    assert st.is_homogeneous(direct_product(r6(), chain(2))) is not True


def test_hsum_examples():
    H = horizontal_sum(boolean(2), boolean(2))
    assert len(H) == 6 and is_isomorphic(H, mo(2))
    E = r6()
    assert is_isomorphic(horizontal_sum(E, chain(1)), E)
    H = horizontal_sum(boolean(2), chain(2))
    # 4 + 3 elements, with 0 and 1 shared
    assert len(H) == 5
    assert st.is_homogeneous(H) is True


def test_hsum_keeps_summands_apart():
    H = horizontal_sum(boolean(2), chain(2))
    left = H.ids(["a", "b"])
    right = H.ids(["a_2"])
    for x in left:
        for y in right:
            assert H.sum(x, y) is None
        assert H.comp[x] in left | {H.zero, H.one}


def test_hsum_needs_two_elements():
    with pytest.raises(ValueError):
        horizontal_sum(trivial(), chain(1))


def test_interval_examples():
    for E in (r6(), l18()):
        assert is_isomorphic(interval_algebra(E, E.one), E)
    L = l18()
    I = interval_algebra(L, L.id("c+c"))
    assert I.names == ("0", "c", "c+c")
    assert I.names[I.one] == "c+c"
    G = gen18()
    I = interval_algebra(G, G.id("d+d"))
    assert {"0", "d", "d+d"} <= set(I.names)
    with pytest.raises(ValueError):
        interval_algebra(L, L.zero)


def test_generated_subalgebra_examples():
    for E in (r6(), l18()):
        assert generated_subalgebra(E, set()) == {E.zero, E.one}
    R = r6()
    # a′ = 1 ⊖ a and a′ ⊖ a = a close up at once: b is never produced
    assert R.name_set(generated_subalgebra(R, {R.id("a")})) == {"0", "a", "a'", "1"}
    L = l18()
    assert L.name_set(generated_subalgebra(L, {L.id("c+c")})) == {"0", "c+c", "(c+c)'", "1"}


def _naive_subalgebras(E):
    n = len(E)
    return {frozenset(S) for k in range(1, n + 1) for S in combinations(range(n), k)
            if is_sub_effect_algebra(E, S)}


@pytest.mark.parametrize("E", [chain(3), boolean(3), r6(), mo(2)], ids=["chain3", "b3", "r6", "mo2"])
def test_all_subalgebras_matches_powerset_scan(E):
    subs = _naive_subalgebras(E)
    assert set(all_subalgebras(E)) == subs
    for x in range(len(E)):
        least = min((S for S in subs if x in S), key=len)
        assert generated_subalgebra(E, {x}) == least


def test_enumerate_small_sizes():
    out = list(enumerate_all(3))
    assert [len(E) for E in out] == [2, 3]
    three = out[1]
    a = three.id("a")
    assert three.comp[a] == a and three.sum(a, a) == three.one


def _classes(tables, n):
    reps = []
    for t in tables:
        E = from_table([str(i) for i in range(n)], 0, n - 1, t)
        if not any(is_isomorphic(E, F) for F in reps):
            reps.append(E)
    return reps


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_enumeration_matches_brute_force(n):
    ours = [E for E in enumerate_all(n) if len(E) == n]
    reps = _classes(naive_tables(n), n)
    assert len(ours) == len(reps)
    for F in reps:
        assert sum(is_isomorphic(E, F) for E in ours) == 1


def test_enumeration_counts():
    sizes = [len(E) for E in enumerate_all(6)]
    assert [sizes.count(n) for n in range(2, 7)] == [1, 1, 3, 4, 10]


def test_enumeration_rediscovers_r6_without_duplicates():
    six = [E for E in enumerate_all(6) if len(E) == 6]
    assert sum(is_isomorphic(E, r6()) for E in six) == 1
    for E, F in combinations(six, 2):
        assert find_isomorphism(E, F) is None


def test_enumeration_cap():
    with pytest.raises(ValueError):
        list(enumerate_all(ENUMERATION_CAP + 1))


HOMOGENEOUS = [chain(1), chain(2), chain(3), boolean(1), boolean(2), mo(2)]


def test_products_and_hsums_of_homogeneous_are_homogeneous():
    for i, E in enumerate(HOMOGENEOUS):
        for F in HOMOGENEOUS[i:]:
            if len(E) * len(F) <= 24:
                assert st.is_homogeneous(direct_product(E, F)) is True
            assert st.is_homogeneous(horizontal_sum(E, F)) is True


@pytest.mark.parametrize("E", [l18(), boolean(3), direct_product(chain(2), r6())], ids=["l18", "b3", "c2xr6"])
def test_central_splitting(E):
    for a in st.central_elements(E):
        if a in (E.zero, E.one):
            continue
        P = direct_product(interval_algebra(E, a), interval_algebra(E, E.comp[a]))
        assert find_isomorphism(E, P) is not None
