"""Truncated formal power series with symmetric-function coefficients.

Univariate series hold e-basis SymF coefficients indexed by the power of z.
The bivariate grid exists to check the closed generating functions: every
identity is multiplied through by its denominator-clearing polynomial first,
so the comparison is between honest polynomial truncations and division by
non-units never happens.
"""

from __future__ import annotations

from .errors import CapacityError, DomainError
from .report import VerificationReport
from .symfunc import (
    SymF,
    cc_via_formula,
    line_tadpole_via_formula,
    tadpole_via_recurrence,
    to_basis,
    x_cycle,
    x_path,
)


def _unit() -> SymF:
    return SymF.unit("e")


def _zero() -> SymF:
    return SymF.zero("e")


class SymSeries:
    """Univariate truncation at z^order; coefficients are e-basis SymF."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        if order < 0:
            raise DomainError("order must be nonnegative")
        coeffs = list(coeffs)
        if len(coeffs) != order + 1:
            raise DomainError("need exactly order+1 coefficients")
        for c in coeffs:
            if not isinstance(c, SymF) or c.basis != "e":
                raise DomainError("coefficients must be e-basis SymF")
        self.order = order
        self.coeffs = tuple(coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def _check(self, other: "SymSeries") -> None:
        if self.order != other.order:
            raise DomainError("order mismatch")

    def __add__(self, other: "SymSeries") -> "SymSeries":
        self._check(other)
        return SymSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "SymSeries") -> "SymSeries":
        self._check(other)
        return SymSeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other) -> "SymSeries":
        if not isinstance(other, SymSeries):
            return SymSeries(self.order, [c * other for c in self.coeffs])
        self._check(other)
        out = [_zero() for _ in range(self.order + 1)]
        for a, ca in enumerate(self.coeffs):
            if ca.is_zero():
                continue
            for b in range(self.order + 1 - a):
                cb = other.coeffs[b]
                if not cb.is_zero():
                    out[a + b] = out[a + b] + ca * cb
        return SymSeries(self.order, out)

    __rmul__ = __mul__


def zero_series(order: int) -> SymSeries:
    return SymSeries(order, [_zero() for _ in range(order + 1)])


def one_series(order: int) -> SymSeries:
    return SymSeries(order, [_unit()] + [_zero() for _ in range(order)])


def E_series(order: int) -> SymSeries:
    """Generating series of the elementary generators; constant term 1."""
    return SymSeries(order, [_unit() if n == 0 else SymF.gen("e", n) for n in range(order + 1)])


def F_series(order: int) -> SymSeries:
    """E minus z times its derivative: coefficient (1-n) e_n."""
    return SymSeries(
        order,
        [_unit() if n == 0 else (1 - n) * SymF.gen("e", n) for n in range(order + 1)],
    )


def E_prime(order: int) -> SymSeries:
    return SymSeries(order, [(n + 1) * SymF.gen("e", n + 1) for n in range(order + 1)])


def E_double_prime(order: int) -> SymSeries:
    return SymSeries(
        order, [(n + 1) * (n + 2) * SymF.gen("e", n + 2) for n in range(order + 1)]
    )


def derivative(s: SymSeries) -> SymSeries:
    """Term-wise derivative; the truncation order drops by one."""
    if s.order < 1:
        raise DomainError("cannot differentiate an order-0 truncation")
    return SymSeries(s.order - 1, [(n + 1) * s.coeffs[n + 1] for n in range(s.order)])


def mul(a: SymSeries, b: SymSeries) -> SymSeries:
    return a * b


def div(a: SymSeries, b: SymSeries) -> SymSeries:
    """Back-substitution; the divisor's constant term must be the unit."""
    a._check(b)
    if b.coeffs[0] != _unit():
        raise DomainError("divisor constant term must be 1")
    out: list = []
    for n in range(a.order + 1):
        t = a.coeffs[n]
        for k in range(1, n + 1):
            t = t - b.coeffs[k] * out[n - k]
        out.append(t)
    return SymSeries(a.order, out)


# ---------------------------------------------------------------------------
# univariate identity checks

def verify_power_sum_gf(order: int) -> VerificationReport:
    """Alternating power-sum series against F/E, coefficient by coefficient."""
    if order > 10:
        raise CapacityError("power-sum check capped at order 10")
    lhs = SymSeries(
        order,
        [
            (-1) ** j * to_basis(SymF.gen("p", j), "e") if j else _unit()
            for j in range(order + 1)
        ],
    )
    rhs = div(F_series(order), E_series(order))
    row: dict = {"truncation": order, "status": "match"}
    for n in range(order + 1):
        if lhs.coeffs[n] != rhs.coeffs[n]:
            row["status"] = "mismatch"
            row["first_mismatch"] = {"order": n}
            break
    return VerificationReport("power-sum generating function", [row])


def verify_path_cycle_gf(order: int) -> VerificationReport:
    """E/F against path expansions; z^2 E''/F against cycle expansions."""
    if order > 9:
        raise CapacityError("path/cycle check capped at order 9")
    rows = []
    paths = div(E_series(order), F_series(order))
    row: dict = {"family": "paths", "truncation": order, "status": "match"}
    for n in range(order + 1):
        if paths.coeffs[n] != to_basis(x_path(n), "e"):
            row["status"] = "mismatch"
            row["first_mismatch"] = {"order": n}
            break
    rows.append(row)
    cycles = div(E_double_prime(order), F_series(order))
    row = {"family": "cycles", "truncation": order, "status": "match"}
    for n in range(2, order + 1):
        if cycles.coeffs[n - 2] != to_basis(x_cycle(n), "e"):
            row["status"] = "mismatch"
            row["first_mismatch"] = {"order": n}
            break
    rows.append(row)
    return VerificationReport("path/cycle generating functions", rows)


# ---------------------------------------------------------------------------
# bivariate grids

class SymSeries2:
    """Rectangular truncation in x and y; cell (a, b) is an e-basis SymF."""

    __slots__ = ("nx", "ny", "grid")

    def __init__(self, nx: int, ny: int, grid):
        if nx < 0 or ny < 0:
            raise DomainError("orders must be nonnegative")
        grid = [list(row) for row in grid]
        if len(grid) != nx + 1 or any(len(row) != ny + 1 for row in grid):
            raise DomainError("grid shape must be (nx+1) x (ny+1)")
        self.nx = nx
        self.ny = ny
        self.grid = grid

    @classmethod
    def zeros(cls, nx: int, ny: int) -> "SymSeries2":
        return cls(nx, ny, [[_zero()] * (ny + 1) for _ in range(nx + 1)])

    def coeff(self, a: int, b: int) -> SymF:
        return self.grid[a][b]

    def _check(self, other: "SymSeries2") -> None:
        if self.nx != other.nx or self.ny != other.ny:
            raise DomainError("order mismatch")

    def __add__(self, other: "SymSeries2") -> "SymSeries2":
        self._check(other)
        return SymSeries2(
            self.nx,
            self.ny,
            [
                [self.grid[a][b] + other.grid[a][b] for b in range(self.ny + 1)]
                for a in range(self.nx + 1)
            ],
        )

    def __sub__(self, other: "SymSeries2") -> "SymSeries2":
        self._check(other)
        return SymSeries2(
            self.nx,
            self.ny,
            [
                [self.grid[a][b] - other.grid[a][b] for b in range(self.ny + 1)]
                for a in range(self.nx + 1)
            ],
        )

    def __mul__(self, other) -> "SymSeries2":
        if not isinstance(other, SymSeries2):
            return SymSeries2(
                self.nx,
                self.ny,
                [[c * other for c in row] for row in self.grid],
            )
        self._check(other)
        out = [[_zero() for _ in range(self.ny + 1)] for _ in range(self.nx + 1)]
        for a1 in range(self.nx + 1):
            for b1 in range(self.ny + 1):
                c1 = self.grid[a1][b1]
                if c1.is_zero():
                    continue
                for a2 in range(self.nx + 1 - a1):
                    for b2 in range(self.ny + 1 - b1):
                        c2 = other.grid[a2][b2]
                        if not c2.is_zero():
                            out[a1 + a2][b1 + b2] = out[a1 + a2][b1 + b2] + c1 * c2
        return SymSeries2(self.nx, self.ny, out)

    __rmul__ = __mul__


def embed_x(s: SymSeries, nx: int, ny: int) -> SymSeries2:
    if s.order < nx:
        raise DomainError("univariate truncation too short")
    grid = SymSeries2.zeros(nx, ny)
    for a in range(nx + 1):
        grid.grid[a][0] = s.coeffs[a]
    return grid


def embed_y(s: SymSeries, nx: int, ny: int) -> SymSeries2:
    if s.order < ny:
        raise DomainError("univariate truncation too short")
    grid = SymSeries2.zeros(nx, ny)
    for b in range(ny + 1):
        grid.grid[0][b] = s.coeffs[b]
    return grid


def poly2(nx: int, ny: int, terms: dict) -> SymSeries2:
    """Bivariate polynomial with integer coefficients, e.g. (x - y)^2."""
    grid = SymSeries2.zeros(nx, ny)
    for (a, b), c in terms.items():
        if a <= nx and b <= ny:
            grid.grid[a][b] = c * _unit()
    return grid


def _assert_graded(s: SymSeries2, offset: int) -> None:
    # every cell (a, b) must be homogeneous of symmetric-function degree a+b+offset
    for a in range(s.nx + 1):
        for b in range(s.ny + 1):
            for lam in s.grid[a][b].terms:
                assert sum(lam) == a + b + offset, (
                    f"cell ({a},{b}) holds degree {sum(lam)}, expected {a + b + offset}"
                )


def _compare_grids(name: str, nx: int, ny: int, lhs: SymSeries2, rhs: SymSeries2) -> VerificationReport:
    row: dict = {"truncation": [nx, ny], "status": "match"}
    for a in range(nx + 1):
        for b in range(ny + 1):
            if lhs.coeff(a, b) != rhs.coeff(a, b):
                row["status"] = "mismatch"
                row["first_mismatch"] = {
                    "bidegree": [a, b],
                    "lhs": str(lhs.coeff(a, b)),
                    "rhs": str(rhs.coeff(a, b)),
                }
                return VerificationReport(name, [row])
    return VerificationReport(name, [row])


def _cleared_ingredients(nx: int, ny: int) -> dict:
    return {
        "Ex2": embed_x(E_double_prime(nx), nx, ny),
        "Ey": embed_y(E_series(ny), nx, ny),
        "Ex": embed_x(E_series(nx), nx, ny),
        "Ey2": embed_y(E_double_prime(ny), nx, ny),
        "E1x": embed_x(E_prime(nx), nx, ny),
        "E1y": embed_y(E_prime(ny), nx, ny),
        "Fx": embed_x(F_series(nx), nx, ny),
        "Fy": embed_y(F_series(ny), nx, ny),
    }


def verify_tadpole_gf(nx: int, ny: int) -> VerificationReport:
    """Tadpole family: both sides times (x-y)^2 F(x) F(y), compared cellwise."""
    if nx + ny > 10:
        raise CapacityError("bivariate checks capped at nx+ny = 10")
    s = _cleared_ingredients(nx, ny)
    fam = SymSeries2.zeros(nx, ny)
    for m in range(2, nx + 1):
        for l in range(ny + 1):
            fam.grid[m][l] = to_basis(tadpole_via_recurrence(m, l), "e")
    lhs = poly2(nx, ny, {(2, 0): 1, (1, 1): -2, (0, 2): 1}) * s["Fx"] * s["Fy"] * fam
    rhs = (
        poly2(nx, ny, {(4, 0): 1, (3, 1): -1}) * s["Ex2"] * s["Ey"]
        - poly2(nx, ny, {(2, 1): 1}) * (s["E1x"] * s["Fy"] - s["E1y"] * s["Fx"])
    )
    _assert_graded(lhs, -2)
    _assert_graded(rhs, -2)
    return _compare_grids("tadpole generating function", nx, ny, lhs, rhs)


def verify_ltadpole_gf(nx: int, ny: int) -> VerificationReport:
    """Line-tadpole family: cleared by (x-y)^2 F(x) F(y)."""
    if nx + ny > 10:
        raise CapacityError("bivariate checks capped at nx+ny = 10")
    s = _cleared_ingredients(nx, ny)
    fam = SymSeries2.zeros(nx, ny)
    for m in range(2, nx + 1):
        for l in range(ny + 1):
            fam.grid[m][l] = to_basis(line_tadpole_via_formula(m, l), "e")
    lhs = poly2(nx, ny, {(2, 0): 1, (1, 1): -2, (0, 2): 1}) * s["Fx"] * s["Fy"] * fam
    rhs = (
        poly2(nx, ny, {(4, 0): 1, (2, 2): -1}) * s["Ex2"] * s["Ey"]
        - poly2(nx, ny, {(2, 1): 2}) * (s["E1x"] * s["Fy"] - s["E1y"] * s["Fx"])
    )
    _assert_graded(lhs, -2)
    _assert_graded(rhs, -2)
    return _compare_grids("line-tadpole generating function", nx, ny, lhs, rhs)


def verify_cc_gf(nx: int, ny: int) -> VerificationReport:
    """Chorded-cycle family: cleared by (x-y)^3 F(x) F(y).

    The clearing exponent is 3; if the comparison fails the report carries the
    first residual cell rather than adjusting the exponent.
    """
    if nx + ny > 10:
        raise CapacityError("bivariate checks capped at nx+ny = 10")
    s = _cleared_ingredients(nx, ny)
    fam = SymSeries2.zeros(nx, ny)
    for a in range(1, nx + 1):
        for b in range(1, ny + 1):
            fam.grid[a][b] = to_basis(cc_via_formula(a, b), "e")
    cube = poly2(nx, ny, {(3, 0): 1, (2, 1): -3, (1, 2): 3, (0, 3): -1})
    lhs = cube * s["Fx"] * s["Fy"] * fam
    inner = s["Ex2"] * s["Ey"] * poly2(nx, ny, {(2, 0): 1}) + s["Ey2"] * s["Ex"] * poly2(
        nx, ny, {(0, 2): 1}
    )
    rhs = (
        poly2(nx, ny, {(2, 1): 1, (1, 2): -1}) * inner
        - poly2(nx, ny, {(2, 2): 2}) * (s["E1x"] * s["Fy"] - s["E1y"] * s["Fx"])
    )
    _assert_graded(lhs, -3)
    _assert_graded(rhs, -3)
    return _compare_grids("chorded-cycle generating function", nx, ny, lhs, rhs)
