import pytest
from hypothesis import given, settings

from psigroups import (
    NotPGroupError,
    closure,
    exponent,
    group_from_text,
    omega_filtration,
    omega_set,
    omega_subgroup,
    prime_of,
    psi_brute,
    psi_subset,
)
from oracle import naive_exponent, naive_omega_set, naive_psi, table_of
from strategies import p_group_names


# --- prime_of ----------------------------------------------------------------

@pytest.mark.parametrize("name,p", [("C27", 3), ("C16*C16", 2), ("H27", 3), ("C125", 5)])
def test_prime_of(name, p):
    assert prime_of(group_from_text(name)) == p


def test_prime_of_rejects_mixed_order():
    with pytest.raises(NotPGroupError):
        prime_of(group_from_text("C12"))


def test_prime_of_rejects_trivial_group():
    with pytest.raises(NotPGroupError):
        prime_of(group_from_text("C1"))


# --- exponent ------------------------------------------------------------------

@pytest.mark.parametrize("name,value", [
    ("C4*C4*C4*C4", 4),
    ("D16*C2*C2*C2*C2", 8),
    ("H27", 3),
    ("C6*C4", 12),  # lcm over a non-p-group
])
def test_exponent_examples(name, value):
    assert exponent(group_from_text(name)) == value


@given(p_group_names)
@settings(max_examples=25)
def test_exponent_matches_oracle(name):
    g = group_from_text(name)
    assert exponent(g) == naive_exponent(table_of(g))


# --- omega sets and subgroups -----------------------------------------------

def test_omega_zero_is_identity_only():
    for name in ["C8", "D8", "H27"]:
        assert omega_set(group_from_text(name), 0) == (0,)


def test_omega_set_d8_level_one():
    assert len(omega_set(group_from_text("D8"), 1)) == 6


def test_omega_set_c4_fourth_power_level_one():
    assert len(omega_set(group_from_text("C4*C4*C4*C4"), 1)) == 16


def test_omega_set_rejects_non_p_group():
    with pytest.raises(NotPGroupError):
        omega_set(group_from_text("C6"), 1)


@pytest.mark.parametrize("name,level,size", [
    ("Q8", 1, 2),
    ("D8", 1, 8),
    ("C8", 2, 4),
])
def test_omega_subgroup_examples(name, level, size):
    assert len(omega_subgroup(group_from_text(name), level)) == size


@given(p_group_names)
@settings(max_examples=20)
def test_omega_sets_match_oracle_and_nest(name):
    g = group_from_text(name)
    p = prime_of(g)
    t = table_of(g)
    previous: tuple[int, ...] = ()
    prev_sub: tuple[int, ...] = ()
    for i in range(4):
        members = omega_set(g, i)
        assert list(members) == naive_omega_set(t, p, i)
        sub = omega_subgroup(g, i)
        assert set(previous) <= set(members)
        assert set(prev_sub) <= set(sub.members)
        assert set(members) <= set(sub.members)
        previous, prev_sub = members, sub.members


def test_omega_of_omega_collapses():
    # Omega_i(Omega_j(G)) = Omega_i(G) for i <= j
    for name in ["C16", "C8*C4", "D16", "Q16", "M16", "C27", "C9*C3", "M27"]:
        g = group_from_text(name)
        filtration = omega_filtration(g)
        for j in range(1, filtration.m + 1):
            sub_j = omega_subgroup(g, j)
            inner = sub_j.as_group()
            for i in range(j + 1):
                inner_members = omega_subgroup(inner, i).members
                lifted = tuple(sub_j.members[k] for k in inner_members)
                assert lifted == omega_subgroup(g, i).members, (name, i, j)


# --- filtration ----------------------------------------------------------------

@pytest.mark.parametrize("name,sizes", [
    ("C8", (1, 2, 4, 8)),
    ("C9*C9", (1, 9, 81)),
])
def test_filtration_subgroup_sizes(name, sizes):
    assert omega_filtration(group_from_text(name)).subgroup_sizes == sizes


def test_filtration_d16_sets_versus_subgroups():
    filtration = omega_filtration(group_from_text("D16"))
    assert filtration.subgroup_sizes == (1, 16, 16, 16)
    assert filtration.set_sizes == (1, 10, 12, 16)
    assert [level.set_is_subgroup for level in filtration.levels] == [
        True, False, False, True]


@given(p_group_names)
@settings(max_examples=20)
def test_filtration_invariants(name):
    g = group_from_text(name)
    filtration = omega_filtration(g)
    assert filtration.levels[0].set_size == filtration.levels[0].subgroup_size == 1
    assert filtration.levels[-1].subgroup_size == g.order
    assert filtration.p ** filtration.m == exponent(g)
    sizes = filtration.subgroup_sizes
    assert all(a <= b for a, b in zip(sizes, sizes[1:]))
    if filtration.all_levels_closed:
        grown = [s for s in sizes if s < g.order] + [g.order]
        assert all(a < b for a, b in zip(grown, grown[1:]))


# --- psi ------------------------------------------------------------------------

@pytest.mark.parametrize("name,value", [
    ("C3*C3*C3", 79),
    ("H27", 79),
    ("C2", 3),
    ("D16*C2*C2*C2*C2", 959),
    ("C4*C4*C4*C4", 991),
])
def test_psi_brute_examples(name, value):
    assert psi_brute(group_from_text(name)) == value


def test_counterexample_direction():
    # larger exponent yet smaller psi
    assert psi_brute(group_from_text("D16*C2*C2*C2*C2")) < psi_brute(
        group_from_text("C4*C4*C4*C4"))


@given(p_group_names)
@settings(max_examples=25)
def test_psi_matches_oracle(name):
    g = group_from_text(name)
    assert psi_brute(g) == naive_psi(table_of(g))
    assert psi_subset(g, range(g.order)) == psi_brute(g)
    assert psi_brute(g) % prime_of(g) == 1


def test_psi_subset_of_subgroup():
    g = group_from_text("C9*C9")
    sub = omega_subgroup(g, 1)
    assert psi_subset(g, sub.members) == 25  # elementary abelian of order 9


def test_psi_elementary_abelian_formula():
    for p, r in [(2, 1), (2, 3), (3, 2), (5, 2), (2, 5)]:
        g = group_from_text("*".join([f"C{p}"] * r))
        assert psi_brute(g) == p ** (r + 1) - p + 1


def test_psi_subset_rejects_bad_index():
    with pytest.raises(IndexError):
        psi_subset(group_from_text("C4"), [7])


def test_psi_lower_bound():
    for name in ["C1", "C2", "D8", "H27"]:
        g = group_from_text(name)
        if g.order == 1:
            assert psi_brute(g) == 1
        else:
            assert psi_brute(g) > g.order


def test_closure_of_omega_set_is_omega_subgroup():
    for name in ["D16", "Q16", "C8*C2"]:
        g = group_from_text(name)
        for i in range(3):
            assert omega_subgroup(g, i).members == closure(g, omega_set(g, i)).members
