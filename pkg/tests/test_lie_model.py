import json
from itertools import combinations

import pytest

from rumin_poisson.exterior import Multiform
from rumin_poisson.lie_model import (
    ConfigurationError,
    buildModel,
    commutator,
    is_real_element,
    mActionOnForms,
    mat_add,
    pairingB,
    quotientBracket,
    sigma,
    unit,
)
from rumin_poisson.scalars import I_UNIT, ONE, ZERO, Scalar


def test_rank_limits():
    with pytest.raises(ConfigurationError):
        buildModel(0)
    with pytest.raises(ConfigurationError):
        buildModel(5)


def test_brackets_antisymmetric(model):
    for u in range(model.dim):
        for v in range(model.dim):
            a = model.bracket_gen(u, v)
            b = model.bracket_gen(v, u)
            assert a == {w: -c for w, c in b.items()}


def test_quotient_bracket_matches_matrices(model):
    # [rep u, rep v] minus its m-part, projected, equals the stored bracket
    for u, v in combinations(range(model.dim), 2):
        A = commutator(model.reps[u], model.reps[v])
        assert model.project(A) == quotientBracket(model, u, v)


def test_pinned_bracket_Z_Zbar(model1):
    lay = model1.layout
    # regression constant from the matrix oracle
    assert quotientBracket(model1, lay.z, lay.zbar) == {lay.z: -ONE, lay.zbar: ONE}


def test_grading_element(model):
    E = model.E
    lay = model.layout
    # ad(E) acts by -1 on G^{1,0} modulo g_1 terms in the quotient basis
    img = model.project(commutator(E, model.reps[lay.g10(1)]))
    assert img.get(lay.g10(1)) is not None


def test_pairing_grading_element(model):
    assert pairingB(model, model.E, model.E) == Scalar(2)


def test_real_form():
    model = buildModel(2)
    last = 3
    X = {(1, 0): Scalar(1, 2), (last, 1): Scalar(-1, 2)}
    assert is_real_element(model, X)
    assert sigma(model, X) == X
    Y = unit(1, 0)
    assert not is_real_element(model, Y)


def test_I_star_invariant(model):
    lay = model.layout
    I = Multiform.dual(model.n, lay.i)
    for e in range(len(model.m_basis)):
        assert mActionOnForms(model, e, I).is_zero()


def test_single_F_dual_not_invariant(model):
    lay = model.layout
    F = Multiform.dual(model.n, lay.f10(1))
    images = [mActionOnForms(model, e, F) for e in range(len(model.m_basis))]
    assert any(not x.is_zero() for x in images)
    for x in images:
        assert all(lay.names[g].startswith("F") for m in x.terms for g in lay.legs(m))


def test_export(tmp_path, model1):
    path = tmp_path / "m.json"
    model1.export(str(path))
    data = json.loads(path.read_text())
    assert data["n"] == 1
    assert len(data["generators"]) == 7
    assert data["structure_constants"]


def test_export_bad_path(model1):
    with pytest.raises(OSError, match="/no/such/dir"):
        model1.export("/no/such/dir/model.json")


def test_m_dimension(model):
    # m = s(u(n) + u(1)) has complex dimension n^2
    assert len(model.m_basis) == model.n ** 2
