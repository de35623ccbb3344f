"""The automorphism group of the discrete Heisenberg group.

An automorphism is determined by where it sends the generators x and
y, because x and y generate the group.  The canonical data is a matrix
M in GL(2,Z) together with two center offsets r, u:

    omega(x) = (m11, m21, r)
    omega(y) = (m12, m22, u)
    omega(z) = (0, 0, det M)

M is the matrix induced on the abelianization Z + Z, i.e. the image of
omega under the projection Aut(G) -> GL(2,Z).  Conversely every such
triple (M, r, u) is an automorphism, so equality of automorphisms is
just equality of data.

The projection splits: section() sends a matrix to an automorphism by
decomposing it into the generators A, B, D and composing fixed
generator images.  The kernel of the projection is the inner
automorphisms, identified with Z + Z by inner(); every automorphism
factors uniquely as inner(v) composed with section(M), which is what
normal_form() computes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import gl2
from ._backend import kernels
from .gl2 import Gl2Matrix, Letter
from .heis import HeisElement, _check_int


@dataclass(frozen=True, slots=True)
class Automorphism:
    """Automorphism data (M, r, u); see the module docstring."""

    matrix: Gl2Matrix
    r: int
    u: int

    def __post_init__(self) -> None:
        if not isinstance(self.matrix, Gl2Matrix):
            raise TypeError("matrix must be a Gl2Matrix")
        _check_int(self.r, "r")
        _check_int(self.u, "u")

    def __call__(self, g: HeisElement) -> HeisElement:
        return apply(self, g)

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        return compose(self, other)

    def __pow__(self, n: int) -> "Automorphism":
        return power(self, n)

    def __str__(self) -> str:
        return format_automorphism(self)


@dataclass(frozen=True, slots=True)
class InnerVector:
    """The class of (p, q, 0) in G modulo its center, i.e. a pair in Z + Z."""

    p: int
    q: int

    def __post_init__(self) -> None:
        _check_int(self.p, "p")
        _check_int(self.q, "q")

    def __add__(self, other: "InnerVector") -> "InnerVector":
        return InnerVector(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "InnerVector") -> "InnerVector":
        return InnerVector(self.p - other.p, self.q - other.q)

    def __neg__(self) -> "InnerVector":
        return InnerVector(-self.p, -self.q)

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


IDENTITY_AUT = Automorphism(gl2.IDENTITY, 0, 0)

ZERO_VECTOR = InnerVector(0, 0)


def act(m: Gl2Matrix, v: InnerVector) -> InnerVector:
    """The natural GL(2,Z) action on Z + Z: matrix times column vector."""
    return InnerVector(m.m11 * v.p + m.m12 * v.q, m.m21 * v.p + m.m22 * v.q)


def apply(omega: Automorphism, g: HeisElement) -> HeisElement:
    """omega(g), computed by the closed form

        (a*m11 + b*m12, a*m21 + b*m22,
         det*c + a*r + b*u + C(a,2)*m11*m21 + C(b,2)*m12*m22 + a*b*m12*m21)

    which is the expansion of omega(z)^c * omega(y)^b * omega(x)^a.

    >>> str(apply(section(gl2.A), HeisElement(1, -1, 0)))
    '(0,-1,1)'
    >>> str(apply(section(gl2.D), HeisElement(1, 1, -1)))
    '(-1,1,0)'
    """
    m = omega.matrix
    return HeisElement(*kernels.aut_apply(
        m.m11, m.m12, m.m21, m.m22, omega.r, omega.u, g.a, g.b, g.c))


def compose(omega2: Automorphism, omega1: Automorphism) -> Automorphism:
    """The automorphism g -> omega2(omega1(g)); matrix part is M2*M1.

    >>> compose(IDENTITY_AUT, rd(7)) == rd(7)
    True
    """
    m2, m1 = omega2.matrix, omega1.matrix
    data = kernels.aut_compose(
        m2.m11, m2.m12, m2.m21, m2.m22, omega2.r, omega2.u,
        m1.m11, m1.m12, m1.m21, m1.m22, omega1.r, omega1.u)
    return Automorphism(Gl2Matrix(*data[:4]), data[4], data[5])


def invert(omega: Automorphism) -> Automorphism:
    """omega^-1.  The matrix part is M^-1; each center offset is pinned
    by one linear equation with unit coefficient det(M), e.g. the
    offset r' of omega^-1 must satisfy omega((n11, n21, r')) = x where
    (n11, n21) is the first column of M^-1, and r' enters that
    c-coordinate as det * r'.

    >>> invert(section(gl2.D)) == section(gl2.D)
    True
    """
    n = gl2.mat_inverse(omega.matrix)
    d = omega.matrix.det
    t = apply(omega, HeisElement(n.m11, n.m21, 0)).c
    s = apply(omega, HeisElement(n.m12, n.m22, 0)).c
    return Automorphism(n, -t * d, -s * d)


def power(omega: Automorphism, n: int) -> Automorphism:
    """omega composed with itself n times; negative n inverts first."""
    _check_int(n, "n")
    if n < 0:
        return power(invert(omega), -n)
    result, base = IDENTITY_AUT, omega
    while n:
        if n & 1:
            result = compose(result, base)
        base = compose(base, base)
        n >>= 1
    return result


def rd(d: int) -> Automorphism:
    """The shear (a, b, c) -> (a + d*b, b, c + b(b-1)d/2).

    >>> str(apply(rd(1), HeisElement(0, 2, 0)))
    '(2,2,1)'
    """
    _check_int(d, "d")
    return Automorphism(Gl2Matrix(1, d, 0, 1), 0, 0)


def inner(v: InnerVector) -> Automorphism:
    """Conjugation by (p, q, 0): (a, b, c) -> (a, b, c + p*b - a*q).

    As data: (I, -q, p), read off the images of x and y.

    >>> str(apply(inner(InnerVector(1, 0)), HeisElement(0, 1, 0)))
    '(0,1,1)'
    """
    return Automorphism(gl2.IDENTITY, -v.q, v.p)


def project(omega: Automorphism) -> Gl2Matrix:
    """The induced matrix on the abelianization; a homomorphism onto
    GL(2,Z) whose kernel is exactly the inner automorphisms."""
    return omega.matrix


# Images of the generator powers under the section.  A^e and B^e map to
# offset-free data; D picks up u = -1 because it sends y to (0, 1, -1).
def _letter_section(sym: Letter, exp: int) -> Automorphism:
    if sym is Letter.RHO:
        return Automorphism(Gl2Matrix(1, exp, 0, 1), 0, 0)
    if sym is Letter.TAU:
        return Automorphism(Gl2Matrix(1, 0, -exp, 1), 0, 0)
    return Automorphism(gl2.D, 0, -1) if exp % 2 else IDENTITY_AUT


def section(m: Gl2Matrix, strategy: str = "left") -> Automorphism:
    """The homomorphic section of the projection: decompose m into a
    generator word and compose the generator images.  The result does
    not depend on the word (the generator images satisfy the defining
    relations), so the decomposition strategy only affects the route.

    >>> section(gl2.IDENTITY) == IDENTITY_AUT
    True
    >>> str(apply(section(gl2.B), HeisElement(1, 1, 0)))
    '(1,0,0)'
    """
    result = IDENTITY_AUT
    for sym, exp in gl2.decompose(m, strategy).letters:
        result = compose(result, _letter_section(sym, exp))
    return result


def normal_form(omega: Automorphism) -> tuple[InnerVector, Gl2Matrix]:
    """The unique (v, M) with omega = inner(v) composed with section(M).

    M is the projection; the residual delta = omega * section(M)^-1 has
    identity matrix and offsets (c1, c2) = (delta.r, delta.u), giving
    v = (c2, -c1).

    >>> normal_form(Automorphism(gl2.IDENTITY, 3, -2))
    (InnerVector(p=-2, q=-3), Gl2Matrix(m11=1, m12=0, m21=0, m22=1))
    """
    m = omega.matrix
    delta = compose(omega, invert(section(m)))
    return InnerVector(delta.u, -delta.r), m


def center_image(omega: Automorphism) -> int:
    """c-coordinate of omega((0,0,1)); always equals det(M)."""
    return apply(omega, HeisElement(0, 0, 1)).c


def is_aut_plus(omega: Automorphism) -> bool:
    """True iff the matrix lands in SL(2,Z); these are exactly the
    automorphisms acting as the identity on the center."""
    return omega.matrix.det == 1


_PAIR_RE = re.compile(r"\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)")


def parse_pair(text: str) -> InnerVector:
    """Parse "(p,q)" with optional whitespace.

    >>> parse_pair("(3, -2)")
    InnerVector(p=3, q=-2)
    """
    m = _PAIR_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not a pair '(p,q)': {text!r}")
    return InnerVector(int(m.group(1)), int(m.group(2)))


_AUT_RE = re.compile(
    r"\{\s*M\s*=\s*(\[\[.*?\]\])\s*,\s*r\s*=\s*(-?\d+)\s*,\s*u\s*=\s*(-?\d+)\s*\}"
)


def parse_automorphism(text: str) -> Automorphism:
    """Parse "{M=[[m11,m12],[m21,m22]], r=<int>, u=<int>}".

    >>> parse_automorphism("{M=[[1,0],[0,1]], r=3, u=-2}").r
    3
    """
    m = _AUT_RE.fullmatch(text.strip())
    if m is None:
        raise ValueError(f"not an automorphism '{{M=[[..]], r=.., u=..}}': {text!r}")
    return Automorphism(gl2.parse_matrix(m.group(1)), int(m.group(2)), int(m.group(3)))


def format_automorphism(omega: Automorphism) -> str:
    return f"{{M={gl2.format_matrix(omega.matrix)}, r={omega.r}, u={omega.u}}}"
