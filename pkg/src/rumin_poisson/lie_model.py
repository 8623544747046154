"""Matrix realization of su(n+1,1), its grading and the quotient (g/m)_C.

Matrices are (n+2)x(n+2) with indices 0, 1..n, n+1 and are stored sparsely as
``{(row, col): Scalar}``.  The block layout (x, X, (B, b), Y, y) is

    [  b    -Y^*    y   ]
    [  X     B      Y   ]
    [  x    -X^*  -b̄   ]

Every quotient generator has a fixed representative in the complement
C = span{E, e_{0,n+1}, e_{n+1,0}, e_{s,0}, e_{s,n+1}, e_{n+1,s}, e_{0,s}}, which
is ad(m)-stable; quotient brackets are the C-parts of matrix commutators.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .exterior import Layout, Multiform, layout, mask_sign, popcount
from .linalg import solve_square
from .scalars import I_UNIT, ONE, ZERO, Scalar, as_scalar

__all__ = [
    "MAX_RANK",
    "ConfigurationError",
    "Matrix",
    "GradedCoords",
    "LieModel",
    "buildModel",
    "build_model",
    "quotientBracket",
    "pairingB",
    "mActionOnForms",
]

MAX_RANK = 4

Matrix = dict  # {(i, j): Scalar}; zero entries dropped
Vector = dict  # {generator id: Scalar}


class ConfigurationError(ValueError):
    pass


HALF = Scalar(Fraction(1, 2))


def mat(entries: Mapping[tuple[int, int], object]) -> Matrix:
    out = {}
    for k, v in entries.items():
        v = as_scalar(v)
        if v:
            out[k] = v
    return out


def mat_add(a: Matrix, b: Matrix, cb=ONE) -> Matrix:
    out = dict(a)
    for k, v in b.items():
        nv = out.get(k, ZERO) + v * cb
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return out


def mat_scale(a: Matrix, c) -> Matrix:
    c = as_scalar(c)
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    rows: dict[int, list] = {}
    for (i, j), v in b.items():
        rows.setdefault(i, []).append((j, v))
    out: dict = {}
    for (i, k), v in a.items():
        for j, w in rows.get(k, ()):
            out[(i, j)] = out.get((i, j), ZERO) + v * w
    return {k: v for k, v in out.items() if v}


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_add(mat_mul(a, b), mat_mul(b, a), -ONE)


def trace(a: Matrix) -> Scalar:
    return sum((v for (i, j), v in a.items() if i == j), ZERO)


def adjoint(a: Matrix) -> Matrix:
    """Conjugate transpose."""
    return {(j, i): v.conjugate() for (i, j), v in a.items()}


def unit(i: int, j: int, c=ONE) -> Matrix:
    return mat({(i, j): c})


@dataclass(frozen=True)
class GradedCoords:
    """Coordinates (x, X, a, m-part, Y, y) of a complex matrix in sl(n+2, C).

    For complexified elements the X and Y slots carry both the column part and
    the row part independently: ``X_col`` is the (s,0) column, ``X_row`` the
    (n+1,s) row; likewise ``Y_col`` = (s,n+1) and ``Y_row`` = (0,s).
    """

    x: Scalar
    X_col: tuple
    X_row: tuple
    a: Scalar
    m_block: tuple  # ((b, B-entries as dict items)), see from_matrix
    Y_col: tuple
    Y_row: tuple
    y: Scalar

    @classmethod
    def from_matrix(cls, n: int, A: Matrix) -> "GradedCoords":
        last = n + 1
        g = lambda i, j: A.get((i, j), ZERO)  # noqa: E731
        a = (g(0, 0) - g(last, last)) * HALF
        b = (g(0, 0) + g(last, last)) * HALF
        block = tuple(sorted(((i, j), v) for (i, j), v in A.items() if 1 <= i <= n and 1 <= j <= n))
        return cls(
            x=g(last, 0),
            X_col=tuple(g(s, 0) for s in range(1, n + 1)),
            X_row=tuple(g(last, s) for s in range(1, n + 1)),
            a=a,
            m_block=(b, block),
            Y_col=tuple(g(s, last) for s in range(1, n + 1)),
            Y_row=tuple(g(0, s) for s in range(1, n + 1)),
            y=g(0, last),
        )

    def to_matrix(self, n: int) -> Matrix:
        last = n + 1
        b, block = self.m_block
        e = {(last, 0): self.x, (0, last): self.y, (0, 0): b + self.a, (last, last): b - self.a}
        for s in range(1, n + 1):
            e[(s, 0)] = self.X_col[s - 1]
            e[(last, s)] = self.X_row[s - 1]
            e[(s, last)] = self.Y_col[s - 1]
            e[(0, s)] = self.Y_row[s - 1]
        for k, v in block:
            e[k] = v
        return mat(e)

    def quotient_part(self) -> "GradedCoords":
        """Drop the m-part."""
        return GradedCoords(self.x, self.X_col, self.X_row, self.a, (ZERO, ()), self.Y_col, self.Y_row, self.y)


@dataclass
class LieModel:
    n: int
    layout: Layout
    S: Matrix
    E: Matrix
    reps: tuple  # generator id -> Matrix
    m_basis: tuple  # Matrix list spanning m_C
    m_names: tuple
    brackets: dict  # (u, v) with u < v -> Vector
    m_action: tuple  # per m-basis element: list over u of Vector (image of generator u)
    d_dual: tuple = field(default=())  # generator w -> Multiform d(e^w)
    _coord_inverse: list = field(default_factory=list, repr=False)
    _coord_index: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.layout.dim

    # --- projections -------------------------------------------------------
    def complement_coords(self, A: Matrix) -> list:
        """Coordinates of the C-part of A in the fixed basis of C."""
        n = self.n
        last = n + 1
        g = lambda i, j: A.get((i, j), ZERO)  # noqa: E731
        out = [(g(0, 0) - g(last, last)) * HALF, g(0, last), g(last, 0)]
        for s in range(1, n + 1):
            out += [g(s, 0), g(s, last), g(last, s), g(0, s)]
        return out

    def m_part(self, A: Matrix) -> Matrix:
        """A minus its C-part, an element of m_C for A in the diagonal block."""
        n = self.n
        c = self.complement_coords(A)
        return mat_add(A, self.from_complement(c), -ONE)

    def from_complement(self, c: list) -> Matrix:
        n, last = self.n, self.n + 1
        e = {(0, 0): c[0], (last, last): -c[0], (0, last): c[1], (last, 0): c[2]}
        for s in range(1, n + 1):
            base = 3 + 4 * (s - 1)
            e[(s, 0)] = c[base]
            e[(s, last)] = c[base + 1]
            e[(last, s)] = c[base + 2]
            e[(0, s)] = c[base + 3]
        return mat(e)

    def project(self, A: Matrix) -> Vector:
        """Class of A in (g/m)_C, in generator coordinates."""
        c = self.complement_coords(A)
        out = {}
        for w, row in enumerate(self._coord_inverse):
            acc = ZERO
            for j, v in row:
                if c[j]:
                    acc = acc + v * c[j]
            if acc:
                out[w] = acc
        return out

    def rep_of(self, v: Vector | int) -> Matrix:
        if isinstance(v, int):
            return self.reps[v]
        acc: Matrix = {}
        for u, c in v.items():
            acc = mat_add(acc, self.reps[u], as_scalar(c))
        return acc

    def bracket_gen(self, u: int, v: int) -> Vector:
        if u == v:
            return {}
        if u < v:
            return self.brackets[(u, v)]
        return {w: -c for w, c in self.brackets[(v, u)].items()}

    def to_json(self) -> dict:
        names = self.layout.names
        sc = []
        for (u, v), vec in sorted(self.brackets.items()):
            for w, c in sorted(vec.items()):
                sc.append([names[u], names[v], names[w], str(c.re), str(c.im)])
        pairing = []
        for u in range(self.dim):
            for v in range(u, self.dim):
                val = pairingB(self, self.reps[u], self.reps[v])
                if val:
                    pairing.append([names[u], names[v], str(val.re), str(val.im)])
        reps = {
            names[u]: [[i, j, str(c.re), str(c.im)] for (i, j), c in sorted(self.reps[u].items())]
            for u in range(self.dim)
        }
        m_act = []
        for name, imgs in zip(self.m_names, self.m_action):
            for u, vec in enumerate(imgs):
                for w, c in sorted(vec.items()):
                    m_act.append([name, names[u], names[w], str(c.re), str(c.im)])
        return {
            "n": self.n,
            "generators": list(names),
            "representatives": reps,
            "structure_constants": sc,
            "pairing": pairing,
            "m_basis": list(self.m_names),
            "m_action": m_act,
        }

    def export(self, path: str) -> None:
        data = json.dumps(self.to_json(), indent=1, sort_keys=True)
        try:
            with open(path, "w") as fh:
                fh.write(data + "\n")
        except OSError as exc:
            raise OSError(f"cannot write model export to {path}: {exc}") from exc


def _generator_reps(n: int) -> list[Matrix]:
    last = n + 1
    lay = layout(n)
    reps: list[Matrix] = [dict() for _ in range(lay.dim)]
    E = mat({(0, 0): 1, (last, last): -1})
    # Z = E^{1,0}: the complex structure on p/m sends E to -2i e_{0,n+1}
    reps[lay.z] = mat_add(mat_scale(E, HALF), unit(0, last), -ONE)
    reps[lay.zbar] = mat_add(mat_scale(E, HALF), unit(0, last), ONE)
    reps[lay.i] = mat({(last, 0): I_UNIT, (0, last): I_UNIT})
    for s in range(1, n + 1):
        reps[lay.f10(s)] = unit(s, last)
        reps[lay.f01(s)] = unit(0, s, -ONE)
        reps[lay.g10(s)] = mat({(s, 0): 1, (s, last): 1})
        reps[lay.g01(s)] = mat({(last, s): -1, (0, s): -1})
    return reps


def _m_basis(n: int) -> tuple[list[Matrix], list[str]]:
    last = n + 1
    basis, names = [], []
    for r in range(1, n + 1):
        for s in range(1, n + 1):
            if r != s:
                basis.append(unit(r, s))
                names.append(f"e{r}{s}")
    for s in range(1, n + 1):
        basis.append(mat({(s, s): 1, (0, 0): Fraction(-1, 2), (last, last): Fraction(-1, 2)}))
        names.append(f"D{s}")
    return basis, names


def _structure_S(n: int) -> Matrix:
    last = n + 1
    e = {(0, last): 1, (last, 0): 1}
    for s in range(1, n + 1):
        e[(s, s)] = 1
    return mat(e)


def buildModel(n: int) -> LieModel:
    """Build (and cache) the model for rank n."""
    if not isinstance(n, int) or n < 1 or n > MAX_RANK:
        raise ConfigurationError(f"rank n must be an integer in 1..{MAX_RANK}, got {n!r}")
    return _build(n)


build_model = buildModel


@lru_cache(maxsize=None)
def _build(n: int) -> LieModel:
    lay = layout(n)
    reps = _generator_reps(n)
    m_basis, m_names = _m_basis(n)
    last = n + 1
    model = LieModel(
        n=n,
        layout=lay,
        S=_structure_S(n),
        E=mat({(0, 0): 1, (last, last): -1}),
        reps=tuple(reps),
        m_basis=tuple(m_basis),
        m_names=tuple(m_names),
        brackets={},
        m_action=(),
    )
    # generator coordinates in C: invert the matrix whose columns are reps
    cols = [model.complement_coords(r) for r in reps]
    dim = lay.dim
    M = [[cols[u][j] for u in range(dim)] for j in range(dim)]
    inv = solve_square(M)
    model._coord_inverse = [[(j, v) for j, v in enumerate(row) if v] for row in inv]

    brackets = {}
    for u in range(dim):
        for v in range(u + 1, dim):
            brackets[(u, v)] = model.project(commutator(reps[u], reps[v]))
    model.brackets = brackets
    model.m_action = tuple(
        tuple(model.project(commutator(mb, reps[u])) for u in range(dim)) for mb in m_basis
    )
    model.d_dual = tuple(_d_of_dual(model, w) for w in range(dim))
    return model


def _d_of_dual(model: LieModel, w: int) -> Multiform:
    # d e^w (X_u, X_v) = -e^w([X_u, X_v])
    terms = {}
    for (u, v), vec in model.brackets.items():
        c = vec.get(w)
        if c:
            terms[(1 << u) | (1 << v)] = -c
    return Multiform(model.n, terms)


def quotientBracket(model: LieModel, u: Vector | int, v: Vector | int) -> Vector:
    """Bracket of classes in (g/m)_C, computed from the cached table."""
    if isinstance(u, int):
        u = {u: ONE}
    if isinstance(v, int):
        v = {v: ONE}
    out: dict = {}
    for a, ca in u.items():
        for b, cb in v.items():
            for w, c in model.bracket_gen(a, b).items():
                out[w] = out.get(w, ZERO) + as_scalar(ca) * as_scalar(cb) * c
    return {w: c for w, c in out.items() if c}


def pairingB(model: LieModel, u, v) -> Scalar:
    """Normalized invariant form B(u, v) = tr(uv) on sl(n+2, C).

    Arguments are matrices or generator combinations (taken via their
    representatives).
    """
    A = u if _is_matrix(u) else model.rep_of(u)
    Bm = v if _is_matrix(v) else model.rep_of(v)
    return trace(mat_mul(A, Bm))


def _is_matrix(x) -> bool:
    return isinstance(x, dict) and all(isinstance(k, tuple) for k in x)


def mActionOnForms(model: LieModel, m_index: int, a: Multiform) -> Multiform:
    """Infinitesimal action of the m-basis element ``m_index`` on a form.

    (m.a)(v_1, ..., v_k) = -sum_i a(v_1, ..., [m, v_i], ..., v_k).
    """
    images = model.m_action[m_index]
    # m . e^w = -sum_u (coefficient of w in ad(m) u) e^u
    dual_img: dict[int, list] = {}
    for u, vec in enumerate(images):
        for w, c in vec.items():
            dual_img.setdefault(w, []).append((u, -c))
    out: dict = {}
    for mask, coef in a.terms.items():
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length() - 1
            for u, c in dual_img.get(w, ()):
                bu = 1 << u
                base = mask ^ low
                if base & bu:
                    continue
                # replace leg w by leg u in place, then sort
                sign = -1 if popcount(base & (low - 1)) & 1 else 1
                sign *= mask_sign(bu, base)
                new = base | bu
                out[new] = out.get(new, ZERO) + coef * c * sign
    return Multiform(model.n, out)


def is_real_element(model: LieModel, A: Matrix) -> bool:
    """Membership in su(n+1,1): A^* S + S A = 0 and tr A = 0."""
    S = model.S
    lhs = mat_add(mat_mul(adjoint(A), S), mat_mul(S, A))
    return not lhs and not trace(A)


def sigma(model: LieModel, A: Matrix) -> Matrix:
    """Conjugation of sl(n+2, C) fixing the real form: A -> -S A^* S."""
    S = model.S
    return mat_scale(mat_mul(mat_mul(S, adjoint(A)), S), -ONE)
