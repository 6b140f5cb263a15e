"""Concrete model of sp(4,R) and its complexification.

All matrices are 4x4 over GaussianRational; the defining relation, the
Cartan involution eigenspaces, and the structural identities used by the
solution modules are checkable exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ExactMatrix, GaussianRational as GR, I, ONE, ZERO

HALF = Fraction(1, 2)

NONCOMPACT_ROOTS = frozenset({(2, 0), (-2, 0), (0, 2), (0, -2), (1, 1), (-1, -1)})
COMPACT_ROOTS = frozenset({(1, -1), (-1, 1)})
ALL_ROOTS = NONCOMPACT_ROOTS | COMPACT_ROOTS


@dataclass(frozen=True)
class Root:
    """a*beta_1 + b*beta_2 in the compact-Cartan weight lattice."""
    a: int
    b: int

    def __post_init__(self):
        if (self.a, self.b) not in ALL_ROOTS:
            raise ValueError(f"({self.a},{self.b}) is not a root")

    @property
    def compact(self) -> bool:
        return (self.a, self.b) in COMPACT_ROOTS


@dataclass(frozen=True)
class NamedElement:
    name: str
    matrix: ExactMatrix


def _m(rows) -> ExactMatrix:
    return ExactMatrix(rows)


def matrix_unit(i: int, j: int) -> ExactMatrix:
    """E_ij, 1-based indices."""
    return _m([[ONE if (r == i - 1 and c == j - 1) else ZERO for c in range(4)]
               for r in range(4)])


J4 = _m([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])

K11 = _m([[0, 0, -I, 0], [0, 0, 0, 0], [I, 0, 0, 0], [0, 0, 0, 0]])
K22 = _m([[0, 0, 0, 0], [0, 0, 0, -I], [0, 0, 0, 0], [0, I, 0, 0]])
K12 = _m([[0, 1, 0, GR(0, -1)],
          [-1, 0, GR(0, -1), 0],
          [0, GR(0, 1), 0, 1],
          [GR(0, 1), 0, -1, 0]]).scale(Fraction(1, 2))
K21 = _m([[0, -1, 0, GR(0, -1)],
          [1, 0, GR(0, -1), 0],
          [0, GR(0, 1), 0, -1],
          [GR(0, 1), 0, 1, 0]]).scale(Fraction(1, 2))

T1 = K11.scale(I)
T2 = K22.scale(I)

# basis of k_C adapted to the U(2) structure
Z = _m([[0, 0, GR(0, -1), 0],
        [0, 0, 0, GR(0, -1)],
        [GR(0, 1), 0, 0, 0],
        [0, GR(0, 1), 0, 0]])
H = (T1 - T2).scale(I.inverse())
Y = _m([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
YPRIME = _m([[0, 0, 0, 1], [0, 0, 1, 0], [0, -1, 0, 0], [-1, 0, 0, 0]])
X = (Y - YPRIME.scale(I)).scale(HALF)
XBAR = (-Y - YPRIME.scale(I)).scale(HALF)
ZPRIME = Y  # same matrix, the name used with the u-basis action

# split Cartan and restricted root vectors
H1 = _m([[1, 0, 0, 0], [0, 0, 0, 0], [0, 0, -1, 0], [0, 0, 0, 0]])
H2 = _m([[0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, -1]])
E_E1_MINUS_E2 = matrix_unit(1, 2) - matrix_unit(4, 3)
E_E1_PLUS_E2 = matrix_unit(1, 4) + matrix_unit(2, 3)
E_2E1 = matrix_unit(1, 3)
E_2E2 = matrix_unit(2, 4)

# involution-transport elements (delta conjugation composed with xi translation)
DELTA = _m([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
XI = _m([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])


def p_plus_minus(x2: ExactMatrix, sign: int) -> ExactMatrix:
    """[[X, s*i*X], [s*i*X, -X]] for a symmetric 2x2 block X and s = +-1."""
    si = I if sign > 0 else -I
    rows = []
    for r in range(2):
        rows.append([x2[r, 0], x2[r, 1], si * x2[r, 0], si * x2[r, 1]])
    for r in range(2):
        rows.append([si * x2[r, 0], si * x2[r, 1], -x2[r, 0], -x2[r, 1]])
    return _m(rows)


_ROOT_BLOCKS = {
    (2, 0): _m([[1, 0], [0, 0]]),
    (1, 1): _m([[0, 1], [1, 0]]),
    (0, 2): _m([[0, 0], [0, 1]]),
}


def root_vector(r: Root) -> NamedElement:
    """Standard root vector for a noncompact root; rejects compact roots."""
    if r.compact:
        raise ValueError("compact roots use K12/K21, not the p_+- construction")
    key = (abs(r.a), abs(r.b))
    sign = 1 if (r.a, r.b) == key else -1
    mat = p_plus_minus(_ROOT_BLOCKS[key], sign)
    return NamedElement(f"X({r.a},{r.b})", mat)


def compact_root_vector(r: Root) -> NamedElement:
    if not r.compact:
        raise ValueError("not a compact root")
    return NamedElement(f"X({r.a},{r.b})", K12 if r.a == 1 else K21)


ELEMENTS: dict[str, ExactMatrix] = {
    "K11": K11, "K22": K22, "K12": K12, "K21": K21,
    "T1": T1, "T2": T2,
    "Z": Z, "H": H, "Y": Y, "Yprime": YPRIME, "X": X, "Xbar": XBAR, "Zprime": ZPRIME,
    "H1": H1, "H2": H2,
    "E_e1me2": E_E1_MINUS_E2, "E_e1pe2": E_E1_PLUS_E2, "E_2e1": E_2E1, "E_2e2": E_2E2,
}
for _r in sorted(NONCOMPACT_ROOTS):
    ELEMENTS[f"X({_r[0]},{_r[1]})"] = root_vector(Root(*_r)).matrix
ELEMENTS["X(1,-1)"] = K12
ELEMENTS["X(-1,1)"] = K21

COMPACT_BASIS = ("K11", "K22", "K12", "K21")
NONCOMPACT_BASIS = tuple(f"X({a},{b})" for a, b in sorted(NONCOMPACT_ROOTS))


def commutator(x: ExactMatrix | NamedElement, y: ExactMatrix | NamedElement) -> ExactMatrix:
    """XY - YX, exact."""
    mx = x.matrix if isinstance(x, NamedElement) else x
    my = y.matrix if isinstance(y, NamedElement) else y
    return mx * my - my * mx


def theta(m: ExactMatrix) -> ExactMatrix:
    """Cartan involution -transpose(M)."""
    return -m.transpose()


def in_sp4(m: ExactMatrix) -> bool:
    """Defining relation transpose(M) J4 + J4 M = 0, exact."""
    return (m.transpose() * J4 + J4 * m).is_zero()


def eigenvalue_under_cartan(x: ExactMatrix | NamedElement) -> Root:
    """Root (a, b) with [T_j, X] = i * (a, b)_j * X; exact, errors if not an eigenvector."""
    mx = x.matrix if isinstance(x, NamedElement) else x
    if mx.is_zero():
        raise ValueError("zero matrix has no root")
    coeffs = []
    for t in (T1, T2):
        br = commutator(t, mx)
        ratio = None
        for i in range(4):
            for j in range(4):
                if not mx[i, j].is_zero():
                    r = br[i, j] / mx[i, j]
                    if ratio is None:
                        ratio = r
                    elif ratio != r:
                        raise ValueError("not a simultaneous eigenvector of the compact Cartan")
                elif not br[i, j].is_zero():
                    raise ValueError("not a simultaneous eigenvector of the compact Cartan")
        # eigenvalue is i*(integer); extract the integer exactly
        c = ratio * (-I)
        if c.im != 0 or c.re.denominator != 1:
            raise ValueError("eigenvalue is not an integer multiple of i")
        coeffs.append(int(c.re))
    return Root(coeffs[0], coeffs[1])


def verify_iwasawa_lemma() -> list[dict]:
    """Check the four displayed decompositions of the noncompact root vectors.

    Each report entry carries the identity label, pass/fail, and for failures
    the offending difference matrix.
    """
    two_i = GR(0, 2)
    cases = [
        ("X(+-(2,0))", [(root_vector(Root(2, 0)).matrix,
                         E_2E1.scale(two_i) + H1 + K11),
                        (root_vector(Root(-2, 0)).matrix,
                         E_2E1.scale(-two_i) + H1 - K11)]),
        ("X(+-(0,2))", [(root_vector(Root(0, 2)).matrix,
                         E_2E2.scale(two_i) + H2 + K22),
                        (root_vector(Root(0, -2)).matrix,
                         E_2E2.scale(-two_i) + H2 - K22)]),
        ("X((1,1))", [(root_vector(Root(1, 1)).matrix,
                       (E_E1_MINUS_E2 + E_E1_PLUS_E2.scale(I)).scale(2) + K21.scale(2))]),
        ("X(-(1,1))", [(root_vector(Root(-1, -1)).matrix,
                        (E_E1_MINUS_E2 - E_E1_PLUS_E2.scale(I)).scale(2) - K12.scale(2))]),
    ]
    report = []
    for label, pairs in cases:
        ok = all((lhs - rhs).is_zero() for lhs, rhs in pairs)
        report.append({"identity": label, "status": "PASS" if ok else "FAIL"})
    return report


def sl2_triple_report() -> list[dict]:
    """Exact check of [H,X]=2X, [H,Xbar]=-2Xbar, [X,Xbar]=H."""
    checks = [
        ("[H,X]=2X", commutator(H, X) - X.scale(2)),
        ("[H,Xbar]=-2Xbar", commutator(H, XBAR) + XBAR.scale(2)),
        ("[X,Xbar]=H", commutator(X, XBAR) - H),
    ]
    return [{"identity": name, "status": "PASS" if diff.is_zero() else "FAIL"}
            for name, diff in checks]


def cartan_decomposition_report() -> dict:
    """sp4 membership and theta eigenspace structure of the named basis."""
    compact_ok = all(in_sp4(ELEMENTS[n]) and (theta(ELEMENTS[n]) - ELEMENTS[n]).is_zero()
                     for n in COMPACT_BASIS)
    noncompact_ok = all(in_sp4(ELEMENTS[n]) and (theta(ELEMENTS[n]) + ELEMENTS[n]).is_zero()
                        for n in NONCOMPACT_BASIS)
    return {
        "compact_dimension": len(COMPACT_BASIS),
        "noncompact_dimension": len(NONCOMPACT_BASIS),
        "compact_ok": compact_ok,
        "noncompact_ok": noncompact_ok,
    }


def n0_generator(u0: Fraction | int = 0, u1: Fraction | int = 0,
                 u2: Fraction | int = 0, u3: Fraction | int = 0) -> ExactMatrix:
    """n(u0,u1,u2,u3), the product of the two displayed unipotent factors."""
    left = _m([[1, 0, u1, u2], [0, 1, u2, u3], [0, 0, 1, 0], [0, 0, 0, 1]])
    right = _m([[1, u0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, -u0, 1]])
    return left * right


def involution_transport_report() -> list[dict]:
    """Structural facts about the delta/xi pair used to relate the two parameter types."""
    id4 = ExactMatrix.identity(4)
    checks = [
        ("delta^2 = 1", (DELTA * DELTA - id4).is_zero()),
        ("xi^2 = 1", (XI * XI - id4).is_zero()),
        ("xi in Sp4", (XI.transpose() * J4 * XI - J4).is_zero()),
        ("theta(xi) = xi", (XI.transpose().inverse() - XI).is_zero()),
    ]
    # conjugation by delta preserves N0 and fixes the u0, flips the u3 entry
    n = n0_generator(u0=Fraction(3), u1=Fraction(5), u2=Fraction(7), u3=Fraction(11))
    conj = DELTA * n * DELTA.inverse()
    expected = n0_generator(u0=Fraction(3), u1=Fraction(-5), u2=Fraction(-7), u3=Fraction(-11))
    checks.append(("delta N0 delta^-1 = N0 with (u0,u3) -> (u0,-u3)", (conj - expected).is_zero()))
    return [{"identity": name, "status": "PASS" if ok else "FAIL"} for name, ok in checks]
