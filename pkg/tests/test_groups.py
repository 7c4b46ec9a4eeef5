import numpy as np
import pytest
from hypothesis import given, settings

from psigroups import (
    GroupBuildError,
    Subgroup,
    TableFormatError,
    closure,
    element_order,
    group_from_table,
    group_from_text,
    is_normal,
    max_table_order,
    order_spectrum,
    parse_group_table,
    quotient,
    serialize_group,
)
from oracle import (
    naive_closure,
    naive_is_group,
    naive_is_normal,
    naive_order,
    naive_spectrum,
    table_of,
)
from strategies import group_names


# --- constructors -----------------------------------------------------------

def test_cyclic_four_orders():
    g = group_from_text("C4")
    assert g.order == 4
    assert sorted(int(o) for o in g.element_orders) == [1, 2, 4, 4]


def test_h27_is_nonabelian_of_exponent_three():
    g = group_from_text("H27")
    assert g.order == 27
    assert not g.is_abelian
    assert max(int(o) for o in g.element_orders) == 3


def test_counterexample_group_has_exponent_eight():
    g = group_from_text("D16*C2*C2*C2*C2")
    assert g.order == 256
    # exponent via brute-force max element order over the product table
    assert max(naive_order(table_of(g), x) for x in range(g.order)) == 8


@pytest.mark.parametrize("text", ["Q12", "H8", "H16", "D5", "D2", "M4", "M12", "Q4"])
def test_constructor_domain_errors(text):
    with pytest.raises(GroupBuildError):
        group_from_text(text)


def test_order_limit_enforced(monkeypatch):
    monkeypatch.setenv("PSIGROUPS_MAX_ORDER", "32")
    assert max_table_order() == 32
    group_from_text("C32")
    with pytest.raises(GroupBuildError):
        group_from_text("C33")
    with pytest.raises(GroupBuildError):
        group_from_text("C16*C4")


@given(group_names)
@settings(max_examples=40)
def test_built_groups_are_groups(name):
    g = group_from_text(name)
    assert g.name == name
    t = table_of(g)
    if g.order <= 24:
        assert naive_is_group(t)
    assert t[0] == list(range(g.order))
    assert [t[i][0] for i in range(g.order)] == list(range(g.order))
    for x in range(g.order):
        assert int(g.element_orders[x]) == naive_order(t, x)
        assert t[x][int(g.inverses[x])] == 0


def test_immutable_table():
    g = group_from_text("C4")
    with pytest.raises(ValueError):
        g.table[0, 0] = 1


# --- element orders and spectra ---------------------------------------------

def test_identity_has_order_one():
    for name in ["C4", "D8", "Q8", "H27"]:
        assert element_order(group_from_text(name), 0) == 1


def test_cyclic_generator_order():
    assert element_order(group_from_text("C4"), 1) == 4


def test_d16_reflections_have_order_two():
    g = group_from_text("D16")
    for x in range(8, 16):
        assert element_order(g, x) == 2


def test_element_order_out_of_range():
    with pytest.raises(IndexError):
        element_order(group_from_text("C4"), 4)


@pytest.mark.parametrize("name,expected", [
    ("C4", {1: 1, 2: 1, 4: 2}),
    ("H27", {1: 1, 3: 26}),
    ("D16", {1: 1, 2: 9, 4: 2, 8: 4}),
])
def test_order_spectrum_examples(name, expected):
    g = group_from_text(name)
    assert order_spectrum(g) == expected
    assert naive_spectrum(table_of(g)) == expected


@given(group_names)
@settings(max_examples=30)
def test_spectrum_counts_sum_to_order(name):
    g = group_from_text(name)
    spectrum = order_spectrum(g)
    assert sum(spectrum.values()) == g.order
    assert spectrum[1] == 1


# --- closure ----------------------------------------------------------------

def test_closure_of_empty_seed_is_trivial():
    sub = closure(group_from_text("C4"), [])
    assert sub.members == (0,)


def test_closure_of_d8_involutions_is_whole_group():
    g = group_from_text("D8")
    seed = [x for x in range(8) if element_order(g, x) <= 2]
    assert len(seed) == 6
    assert len(closure(g, seed)) == 8


def test_closure_of_q8_involutions_is_tiny():
    g = group_from_text("Q8")
    seed = [x for x in range(8) if g.power(x, 2) == 0]
    assert len(closure(g, seed)) == 2


def test_closure_index_out_of_range():
    with pytest.raises(IndexError):
        closure(group_from_text("C4"), [5])


@given(group_names)
@settings(max_examples=25)
def test_closure_matches_oracle_and_is_idempotent(name):
    g = group_from_text(name)
    seed = [x for x in range(0, g.order, 3)]
    sub = closure(g, seed)
    assert list(sub.members) == naive_closure(table_of(g), seed)
    again = closure(g, sub.members)
    assert again.members == sub.members
    assert g.order % len(sub) == 0  # Lagrange


# --- subgroups and normality -------------------------------------------------

def test_subgroup_validation_rejects_non_closed():
    g = group_from_text("C4")
    with pytest.raises(ValueError):
        Subgroup(g, (0, 1))  # 1+1=2 missing


def test_trivial_subgroup_is_normal():
    g = group_from_text("D8")
    assert is_normal(g, closure(g, []))


def test_d8_center_is_normal():
    g = group_from_text("D8")
    center = Subgroup(g, (0, 2))  # {1, r^2}
    assert is_normal(g, center)
    assert naive_is_normal(table_of(g), [0, 2])


def test_d8_reflection_subgroup_is_not_normal():
    g = group_from_text("D8")
    sub = closure(g, [4])  # <s>, a reflection
    assert sub.members == (0, 4)
    assert not is_normal(g, sub)
    assert not naive_is_normal(table_of(g), [0, 4])


def test_subgroup_as_group_restricts_table():
    g = group_from_text("C8")
    sub = closure(g, [2])
    h = sub.as_group()
    assert h.order == 4
    assert sorted(int(o) for o in h.element_orders) == [1, 2, 4, 4]


# --- quotients ----------------------------------------------------------------

def test_quotient_c4_by_c2():
    g = group_from_text("C4")
    q = quotient(g, Subgroup(g, (0, 2)))
    assert q.order == 2
    assert int(q.element_orders.sum()) == 3


def test_quotient_c8_by_omega1_is_cyclic():
    g = group_from_text("C8")
    q = quotient(g, closure(g, [4]))
    assert q.order == 4
    assert max(int(o) for o in q.element_orders) == 4


def test_quotient_q8_by_center_has_exponent_two():
    g = group_from_text("Q8")
    q = quotient(g, Subgroup(g, (0, 2)))
    assert q.order == 4
    assert max(int(o) for o in q.element_orders) == 2


def test_quotient_rejects_non_normal():
    from psigroups import NotNormalError

    g = group_from_text("D8")
    with pytest.raises(NotNormalError):
        quotient(g, closure(g, [4]))


@given(group_names)
@settings(max_examples=20)
def test_quotient_by_whole_group_is_trivial(name):
    g = group_from_text(name)
    q = quotient(g, closure(g, range(g.order)))
    assert q.order == 1


# --- GT1 serialization ---------------------------------------------------------

def test_serialize_c2_exact_bytes():
    assert serialize_group(group_from_text("C2")) == "GT1 2\n0 1\n1 0\n"


def test_round_trip_d8():
    g = group_from_text("D8")
    h = parse_group_table(serialize_group(g))
    assert np.array_equal(g.table, h.table)


@given(group_names)
@settings(max_examples=25)
def test_round_trip_is_identity_on_tables(name):
    g = group_from_text(name)
    h = parse_group_table(serialize_group(g), name=name)
    assert np.array_equal(g.table, h.table)
    assert np.array_equal(g.element_orders, h.element_orders)


@pytest.mark.parametrize("text,fragment", [
    ("GT 2\n0 1\n1 0\n", "malformed header"),
    ("GT1 two\n0 1\n1 0\n", "malformed header"),
    ("GT1 2\n0 1\n1 0", "end with a newline"),
    ("GT1 2\n0 1 0\n1 0\n", "expected 2 entries"),
    ("GT1 2\n0 1\n", "expected 2 rows"),
    ("GT1 2\n0 0\n1 0\n", "not a latin square"),
    ("GT1 2\n0 1\n1 2\n", "out of range"),
    ("GT1 2\n1 0\n0 1\n", "identity is not at index 0"),
    ("GT1 2\n0 1\n1 -0\n", "nonnegative decimal"),
])
def test_parse_group_table_errors(text, fragment):
    with pytest.raises(TableFormatError) as err:
        parse_group_table(text)
    assert fragment in str(err.value)


def test_parse_rejects_non_associative_latin_square():
    # a unital latin square of order 5 that is not a group (no associativity);
    # built from a loop: rows 1..4 permuted so that (1*1)*2 != 1*(1*2)
    text = "GT1 5\n0 1 2 3 4\n1 2 0 4 3\n2 3 4 0 1\n3 4 1 2 0\n4 0 3 1 2\n"
    with pytest.raises(TableFormatError) as err:
        parse_group_table(text)
    assert "associativity" in str(err.value)


def test_group_from_table_validates_shape():
    with pytest.raises(TableFormatError):
        group_from_table("bad", [[0, 1], [1, 0], [0, 1]])
