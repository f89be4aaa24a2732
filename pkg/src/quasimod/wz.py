"""Certificate verification for the alternating sum A(N) = sum_r beta_r(N).

beta_r(N) = 2 C(r,2) C(N,r) C(N,r-1) (N+1-2r), and the rational function
K(N, r) certifies the telescoping recurrence that yields
A(N) = -N (N-1) C(2N-2, N-1).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .numkernel import binomial
from .ring import E2, ZERO, GradedPoly, derive_poly
from .brackets import bracket
from .depth import component
from .spaces import Cusp, Modular, membership

__all__ = [
    "CertificateReport",
    "DegenerateCertificate",
    "alpha",
    "beta",
    "certificate_K",
    "certificate_check",
    "a_direct",
    "a_closed",
    "q2_bracket_check",
    "q2_bracket_rhs",
]


class DegenerateCertificate(ZeroDivisionError):
    pass


def _c(a, b):
    # binomial with the usual zero outside 0 <= b <= a; here a >= 0 always
    return binomial(a, b) if a >= 0 else 0


def alpha(N: int, r: int) -> int:
    return 2 * (-1) ** r * _c(r, 2) * _c(N, r) * _c(N, r - 1) * (N + 1 - 2 * r) if r >= 0 else 0


def beta(N: int, r: int) -> int:
    return (-1) ** r * alpha(N, r)


def certificate_K(N: int, r: int) -> Fraction:
    den = (N - 2 * r + 1) * (N - r + 1) * (N - r + 2) * (N - 1)
    if den == 0:
        raise DegenerateCertificate(f"K({N}, {r}) has a vanishing denominator")
    num = (r - 2) * (r - 1) * (N + 1) * (
        3 * N**3 + 8 * N**2 * (1 - r) + N * (4 * r**2 - 6 * r + 3) - 2 * r**2 + 4 * r - 2
    )
    return Fraction(num, den)


def a_direct(N: int) -> int:
    return sum(beta(N, r) for r in range(2, N + 1))


def a_closed(N: int) -> int:
    return -N * (N - 1) * binomial(2 * N - 2, N - 1)


@dataclass
class CertificateReport:
    N: int
    checked_r: list[int] = field(default_factory=list)
    skipped_r: list[int] = field(default_factory=list)
    failed_r: list[int] = field(default_factory=list)
    ratio_ok: bool = False
    closed_form_ok: bool = False

    @property
    def passed(self) -> bool:
        return not self.failed_r and self.ratio_ok and self.closed_form_ok


def certificate_check(N: int) -> CertificateReport:
    if N < 2:
        raise ValueError("certificate needs N >= 2")
    rep = CertificateReport(N)
    for r in range(N + 2):
        try:
            k0 = certificate_K(N, r)
            k1 = certificate_K(N, r + 1)
        except DegenerateCertificate:
            rep.skipped_r.append(r)
            continue
        lhs = 2 * (N + 1) * (2 * N - 1) * beta(N, r) - N * (N - 1) * beta(N + 1, r)
        rhs = k1 * beta(N, r + 1) - k0 * beta(N, r)
        (rep.checked_r if lhs == rhs else rep.failed_r).append(r)
    a_n, a_n1 = a_direct(N), a_direct(N + 1)
    rep.ratio_ok = a_n1 * N * (N - 1) == a_n * 2 * (N + 1) * (2 * N - 1)
    rep.closed_form_ok = a_n == a_closed(N)
    return rep


def _d(p: GradedPoly, j: int) -> GradedPoly:
    for _ in range(j):
        p = derive_poly(p)
    return p


def q2_bracket_rhs(m: int) -> GradedPoly:
    """24(2m+2) D^{2m+1}E2 + 4 [two binomial sums of products of derivatives of E2]."""
    N = 2 * m + 2
    out = _d(E2, 2 * m + 1).scale(24 * N)
    acc = ZERO
    for r in range(2, N + 1):
        c = (-1) ** r * binomial(N, r) ** 2 * binomial(r, 2) * binomial(r + 1, 2)
        acc = acc + (_d(E2, r - 2) * _d(E2, N - r)).scale(c)
    for r in range(1, N):
        c = (-1) ** r * binomial(N, r) ** 2 * binomial(r + 1, 2) * binomial(N + 1 - r, 2)
        acc = acc + (_d(E2, r - 1) * _d(E2, N - 1 - r)).scale(c)
    return out + acc.scale(4)


def q2_bracket_check(m: int) -> bool:
    """144 R_2([E2,E2]_{2m+2}) equals the displayed expansion, and R_2 is modular.

    R_2 is required to be a cusp form only for m >= 1: cuspidality needs the
    bracket index 2m+2 to exceed the total depth 2. At m = 0 one gets
    R_2 = -E4/36.
    """
    if m < 0:
        raise ValueError("m must be >= 0")
    b = bracket(E2, E2, 2 * m + 2).poly
    r2 = component(b, 2)
    if r2.scale(144) != q2_bracket_rhs(m):
        return False
    target = Cusp(4 * m + 4) if m >= 1 else Modular(4 * m + 4)
    return membership(r2, [target]) is not None
