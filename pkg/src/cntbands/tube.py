"""Factor-space model of a single-wall nanotube.

Rolling the sheet identifies sites differing by an integer multiple of the
chirality vector c (a sum-zero integer triple with c0 > c1 >= c2).  Tube
atoms are therefore classes v + Zc; we keep exact integer arithmetic
throughout, representing each class by the unique member whose projection
on c lies in [0, ||c||^2).

From c alone the module derives the tube's symmetry data: the rotation
order n = gcd(c), the shortest pure translation b, the helical (screw)
generator omega, and the counts q, q' that organize atoms into the
(s, m, p) coordinates: screw power, rotation power, sublattice flip.
"""

import cmath
import math
from dataclasses import dataclass
from itertools import permutations

from .geom import inner
from .honeycomb import THETA, nearest_neighbors


class ChiralityError(ValueError):
    """Invalid chirality triple; `code` is one of zero / sum / order."""

    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class DecompositionError(RuntimeError):
    """Internal consistency failure while decomposing a class."""


ARMCHAIR = "armchair"
ZIGZAG = "zigzag"
CHIRAL = "chiral"


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def _norm2(u):
    return _dot(u, u)


def validate_chirality(raw):
    """Check a triple against the chirality domain (sum 0, c0 > c1 >= c2)."""
    c = tuple(raw)
    if len(c) != 3 or any(int(x) != x for x in c):
        raise ChiralityError("sum", f"chirality must be an integer triple, got {raw}")
    c = tuple(int(x) for x in c)
    if c == (0, 0, 0):
        raise ChiralityError("zero", "chirality must be nonzero")
    if sum(c) != 0:
        raise ChiralityError("sum", f"chirality components must sum to 0, got sum {sum(c)}")
    if not (c[0] > c[1] >= c[2]):
        raise ChiralityError(
            "order",
            f"chirality {c} violates c0 > c1 >= c2; canonical form is "
            f"{canonicalize_chirality(c)}",
        )
    return c


def tube_class(c):
    """armchair (c1 == c2), zigzag (c1 == 0), otherwise chiral."""
    if c[1] == c[2]:
        return ARMCHAIR
    if c[1] == 0:
        return ZIGZAG
    return CHIRAL


def canonicalize_chirality(raw):
    """Reduce an arbitrary sum-zero nonzero triple to the chirality domain.

    Applies the 12 signed coordinate permutations (lattice point symmetries
    restricted to T) and returns the image with c0 > c1 >= c2; if more than
    one image qualifies, the lexicographically largest wins.
    """
    c = tuple(int(x) for x in raw)
    if c == (0, 0, 0):
        raise ChiralityError("zero", "chirality must be nonzero")
    if sum(c) != 0:
        raise ChiralityError("sum", f"chirality components must sum to 0, got sum {sum(c)}")
    images = []
    for sign in (1, -1):
        for p in permutations((sign * c[0], sign * c[1], sign * c[2])):
            if p[0] > p[1] >= p[2]:
                images.append(p)
    if not images:
        raise ChiralityError("order", f"no domain image found for {raw}")
    return max(images)


@dataclass(frozen=True)
class TubeSymmetry:
    """Symmetry data derived from a chirality vector.

    n: rotation order (gcd of c); c_prime: c/n; R: gcd of the pairwise
    component differences of c; b: shortest pure translation along the
    axis; q = ||c||^2 / R hexagons per translational cell; q_prime = q/n;
    omega: shortest screw-generator vector with <omega, b> = ||b||^2/q'.
    """

    c: tuple
    n: int
    c_prime: tuple
    R: int
    b: tuple
    q: int
    q_prime: int
    omega: tuple

    def line_spacing(self, a):
        """Distance 2*pi/(a*||c||) between neighboring allowed k-lines."""
        return 2.0 * math.pi / (a * math.sqrt(_norm2(self.c)))


def _ext_gcd(x, y):
    """Return (g, u, v) with u*x + v*y == g == gcd(x, y), g >= 0."""
    old_r, r = x, y
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        qt = old_r // r
        old_r, r = r, old_r - qt * r
        old_u, u = u, old_u - qt * u
        old_v, v = v, old_v - qt * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def _shortest_screw(b, target):
    """Shortest sum-zero integer triple w with <w, b> = target.

    Solutions form a line w0 + Z*h with h parallel to the tube axis
    direction; the norm is quadratic in the step, so it suffices to scan a
    small window around the real minimizer.  Ties (the minimal-norm set can
    contain two vectors) break to the lexicographically smallest triple.
    """
    p = b[0] - b[2]
    q = b[1] - b[2]
    g, u, v = _ext_gcd(p, q)
    if target % g:
        raise DecompositionError(f"no screw solution: gcd {g} does not divide {target}")
    scale = target // g
    x, y = u * scale, v * scale
    w0 = (x, y, -x - y)
    hx, hy = q // g, -p // g
    h = (hx, hy, -hx - hy)
    t_star = -_dot(w0, h) / _dot(h, h)
    best = None
    for t in range(math.floor(t_star) - 2, math.ceil(t_star) + 3):
        w = (w0[0] + t * h[0], w0[1] + t * h[1], w0[2] + t * h[2])
        key = (_norm2(w), w)
        if best is None or key < best:
            best = key
    return best[1]


def tube_symmetry(c):
    """Derive the full symmetry record for a valid chirality."""
    c = validate_chirality(c)
    n = math.gcd(c[0], math.gcd(c[1], c[2]))
    c_prime = (c[0] // n, c[1] // n, c[2] // n)
    diffs = (c[1] - c[2], c[2] - c[0], c[0] - c[1])
    R = math.gcd(diffs[0], math.gcd(diffs[1], diffs[2]))
    b = (diffs[0] // R, diffs[1] // R, diffs[2] // R)
    q, rem = divmod(_norm2(c), R)
    if rem or q % n:
        raise DecompositionError(f"q = ||c||^2/R is not a multiple of n for c={c}")
    q_prime = q // n
    omega = _shortest_screw(b, _norm2(b) // q_prime)
    return TubeSymmetry(c=c, n=n, c_prime=c_prime, R=R, b=b, q=q, q_prime=q_prime, omega=omega)


def diameter(c, a):
    """Tube diameter ||c|| * a / pi in the units of a (Angstrom for a physical a)."""
    if a <= 0:
        raise ValueError(f"scale a must be positive, got {a}")
    return math.sqrt(inner(c, c)) * a / math.pi


def canonical_rep(v, c):
    """Canonical representative of the class v + Zc.

    Subtracts floor(<v,c>/||c||^2) copies of c, landing the projection on c
    in [0, ||c||^2).  Exact integer arithmetic; equal reps iff same class.
    """
    j = _dot(v, c) // _norm2(c)
    return (v[0] - j * c[0], v[1] - j * c[1], v[2] - j * c[2])


def class_neighbors(rep, c):
    """Canonical representatives of the three bonded classes."""
    return tuple(canonical_rep(nb, c) for nb in nearest_neighbors(rep))


def class_next_nearest_neighbors(rep, c):
    """The six next-to-nearest classes, via double neighbor application."""
    out = []
    for i, vi in enumerate(nearest_neighbors(rep)):
        for j, vij in enumerate(nearest_neighbors(vi)):
            if i != j:
                out.append(canonical_rep(vij, c))
    return tuple(out)


def decompose(rep, sym):
    """Coordinates (s, m, p) of a class: screw power, rotation power, flip.

    p is the coordinate sum of the representative; s comes from the exact
    axial projection; the residual must be an integer multiple of c_prime,
    reduced mod n to give m.  A non-integer s or a skew residual means the
    inputs are inconsistent and raises DecompositionError.
    """
    p = sum(rep)
    if p not in (0, 1):
        raise DecompositionError(f"representative {rep} has coordinate sum {p}")
    if p:
        w = (THETA[0] - rep[0], -rep[1], -rep[2])
    else:
        w = tuple(rep)
    nb2 = _norm2(sym.b)
    s, rem = divmod(sym.q_prime * _dot(w, sym.b), nb2)
    if rem:
        raise DecompositionError(f"axial projection of {rep} is not an integer screw power")
    r = (w[0] - s * sym.omega[0], w[1] - s * sym.omega[1], w[2] - s * sym.omega[2])
    t, rem = divmod(r[0], sym.c_prime[0])
    if rem or r != (t * sym.c_prime[0], t * sym.c_prime[1], t * sym.c_prime[2]):
        raise DecompositionError(f"residual {r} of {rep} is not parallel to c_prime")
    return (s, t % sym.n, p)


def compose(s, m, p, sym):
    """Canonical representative of tau^p g_omega^s g_c'^m applied to [0,0,0]."""
    if not 0 <= m < sym.n:
        raise ValueError(f"m must lie in [0, {sym.n}), got {m}")
    if p not in (0, 1):
        raise ValueError(f"p must be 0 or 1, got {p}")
    x = tuple(s * sym.omega[i] + m * sym.c_prime[i] for i in range(3))
    if p:
        x = (THETA[0] - x[0], -x[1], -x[2])
    return canonical_rep(x, sym.c)


def irrep_character(m, kappa, sym, a, generator):
    """Character of a line representation on a symmetry generator.

    exp(-i 2 pi m / n) on the rotation g_c'; exp(-i kappa a / q') on the
    screw g_omega.  kappa must lie in [0, 2 pi q'/a).
    """
    if not 0 <= m < sym.n:
        raise ValueError(f"m must lie in [0, {sym.n}), got {m}")
    if not 0.0 <= kappa < 2.0 * math.pi * sym.q_prime / a:
        raise ValueError(f"kappa {kappa} outside [0, 2 pi q'/a)")
    if generator == "g_c_prime":
        return cmath.exp(-2j * math.pi * m / sym.n)
    if generator == "g_omega":
        return cmath.exp(-1j * kappa * a / sym.q_prime)
    raise ValueError(f"unknown generator {generator!r}")
