import json

import pytest

from autbound.bounds import Partition
from autbound.catalog import (
    example_ids,
    external_data_dir,
    fermat_record,
    get_example,
    get_primitive_group,
    golden_ratio,
    group_from_json,
    group_to_json,
    i_sqrt3,
    primitive_group_ids,
    sqrt5,
    sqrt_minus7,
)
from autbound.cyclo import QQ, rational
from autbound.lattice import diagonal_stabilizer, exponent_minor_bound
from autbound.poly import HomogPoly, avoids_variables, smoothness_necessary


def test_gauss_sums():
    assert sqrt_minus7() * sqrt_minus7() == rational(-7)
    assert sqrt5() * sqrt5() == rational(5)
    assert i_sqrt3() * i_sqrt3() == rational(-3)
    tau = golden_ratio()
    assert tau * tau == tau + rational(1)  # golden ratio equation


def test_registry_contents():
    assert example_ids() == [
        "ex-1-4", "ex-1-6", "ex-1-6-2", "ex-2-4", "ex-2-6", "ex-2-12", "ex-4-6", "ex-4-12",
    ]
    with pytest.raises(KeyError):
        get_example("ex-9-9")


def test_expected_numbers_are_consistent():
    for eid in example_ids():
        rec = get_example(eid)
        assert rec.expected_linf == rec.expected_scalar * rec.expected_linx
        assert rec.partition.n == rec.n + 2
        if rec.polynomial is not None:
            assert rec.polynomial.degree == rec.d
            assert rec.polynomial.nvars == rec.n + 2


def test_every_polynomial_passes_smoothness_and_avoidance():
    for eid in example_ids():
        rec = get_example(eid)
        f = rec.polynomial
        assert smoothness_necessary(f).ok, eid
        nv = rec.n + 2
        for k in range(1, nv):
            if 2 * k < nv:
                assert avoids_variables(f, k), (eid, k)


def test_every_polynomial_satisfies_lattice_bounds():
    for eid in example_ids():
        rec = get_example(eid)
        bound = rec.d ** (rec.n + 2)
        stab = diagonal_stabilizer(rec.polynomial)
        assert stab.order <= bound, eid
        minor = exponent_minor_bound(rec.polynomial)
        assert 0 < minor.determinant <= bound, eid


def test_fermat_record():
    rec = fermat_record(2, 5)
    assert rec.expected_linf == 24 * 5**4
    assert rec.expected_scalar == 5
    assert rec.expected_linx == 15000 // 5
    assert rec.partition == Partition([1, 1, 1, 1])
    stab = diagonal_stabilizer(rec.polynomial)
    assert stab.order == 5**4 and set(stab.elementary_divisors) == {5}
    with pytest.raises(ValueError):
        fermat_record(1, 2)


def test_group_file_roundtrip():
    for eid in ("ex-1-4", "ex-2-6", "ex-4-6"):
        grp = get_example(eid).group
        data = group_to_json(grp, note=eid)
        text = json.dumps(data)
        back = group_from_json(json.loads(text))
        assert back.dimension == grp.dimension
        assert back.conductor == grp.conductor
        assert all(a == b for a, b in zip(back.generators, grp.generators))


def test_polynomial_file_roundtrip():
    for eid in example_ids():
        f = get_example(eid).polynomial
        assert HomogPoly.from_json(json.loads(json.dumps(f.to_json()))) == f


def test_primitive_group_registry():
    core = primitive_group_ids("core")
    assert "binary-icosahedral" in core and "valentiner-group" in core
    rec = get_primitive_group("binary-octahedral")
    assert rec.expected_order == 48 and rec.expected_semiinvariant_degree == 6
    with pytest.raises(KeyError):
        get_primitive_group("no-such-group")


@pytest.mark.skipif(not (external_data_dir() / "sp4_3_dim4.json").exists(),
                    reason="external generator files not built")
def test_external_files_parse():
    for gid in ("sp4-3", "psp4-3", "two-a7", "two-s6"):
        rec = get_primitive_group(gid)
        assert rec.profile == "extended"
        assert rec.group.dimension in (4, 5)
