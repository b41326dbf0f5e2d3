"""Numerical models of polarized surfaces.

A surface enters the computation only through a handful of integers:
K^2, h^2(O) (equivalently p_g when q = 0), the self-intersection and
K-pairing of a chosen line bundle class, and the degrees of the closed
points we are allowed to use as cycles. Everything downstream is exact
integer arithmetic on these, so the types here are thin frozen records
with validation, plus a small catalog of standard examples.

Ampleness cannot be decided from these numbers alone, so it is carried
as an assertion made by whoever built the record. The only check we can
do (and do) is the Nakai necessary condition c1^2 > 0.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import ValidationError

__all__ = [
    "SurfaceData",
    "LineBundleClass",
    "PolarizedSurface",
    "ConicBundleData",
    "BrauerSeveriData",
    "catalog",
    "blow_up",
    "tensor_power",
    "CATALOG_NAMES",
]


@dataclass(frozen=True)
class SurfaceData:
    """Intersection-theoretic skeleton of a smooth projective surface with q = 0.

    point_degrees lists degrees of closed points available as supports for
    the length-d cycles; order is kept as given (it feeds deterministic
    pipelines) but degrees must be positive.
    """

    K_sq: int
    h2: int
    point_degrees: tuple[int, ...] = (1,)
    char_zero: bool = True

    def __post_init__(self):
        object.__setattr__(self, "point_degrees", tuple(self.point_degrees))
        if self.h2 < 0:
            raise ValidationError("h2 must be nonnegative", path="h2")
        if not self.point_degrees:
            raise ValidationError("at least one point degree is required", path="points")
        for i, d in enumerate(self.point_degrees):
            if not isinstance(d, int) or isinstance(d, bool) or d <= 0:
                raise ValidationError("degrees must be positive integers", path=f"points[{i}]")


@dataclass(frozen=True)
class LineBundleClass:
    """A line bundle seen through its numerical class.

    ample_asserted records a claim by the caller; we verify only the
    necessary condition c1^2 > 0 and otherwise take the claim on faith.
    """

    c1_sq: int
    c1_dot_K: int
    ample_asserted: bool = False

    def __post_init__(self):
        if self.ample_asserted and self.c1_sq <= 0:
            raise ValidationError(
                "ample_asserted requires c1_sq > 0 (Nakai-Moishezon necessary condition)",
                path="line_bundle.c1_sq",
            )


@dataclass(frozen=True)
class PolarizedSurface:
    """A surface record together with a distinguished line bundle class."""

    surface: SurfaceData
    bundle: LineBundleClass
    name: str = "surface"

    # Shorthands: every formula downstream reads these four numbers.
    @property
    def c1_sq(self) -> int:
        return self.bundle.c1_sq

    @property
    def c1_dot_K(self) -> int:
        return self.bundle.c1_dot_K

    @property
    def K_sq(self) -> int:
        return self.surface.K_sq

    @property
    def h2(self) -> int:
        return self.surface.h2


@dataclass(frozen=True)
class ConicBundleData:
    """A conic bundle over a conic, polarized by the (m, a)-twist of -K.

    r counts geometric singular fibers, delta is the smallest degree of a
    closed point on the base curve. The fiber class F satisfies F.F = 0 and
    K.F = -2*delta; the polarization is m*(-K) + a*F. All the induced
    intersection numbers are derived properties, never stored.
    """

    r: int
    delta: int
    m: int
    a: int
    point_degrees: tuple[int, ...] = (1,)
    char_zero: bool = True
    name: str = "conic bundle"

    def __post_init__(self):
        object.__setattr__(self, "point_degrees", tuple(self.point_degrees))
        if self.r < 0:
            raise ValidationError("r must be nonnegative", path="conic.r")
        if self.delta <= 0:
            raise ValidationError("delta must be positive", path="conic.delta")
        if self.m <= 0:
            raise ValidationError("m must be positive", path="conic.m")
        for i, d in enumerate(self.point_degrees):
            if not isinstance(d, int) or isinstance(d, bool) or d <= 0:
                raise ValidationError("degrees must be positive integers", path=f"points[{i}]")

    @property
    def K_sq(self) -> int:
        return 8 - self.r

    @property
    def fiber_dot_K(self) -> int:
        return -2 * self.delta

    @property
    def c1_sq(self) -> int:
        # (m*(-K) + a*F)^2 = m^2*K^2 + 2*m*a*(-K).F = m^2*(8-r) + 4*m*a*delta
        return self.m * self.m * self.K_sq + 4 * self.m * self.a * self.delta

    @property
    def c1_dot_K(self) -> int:
        # (m*(-K) + a*F).K = -m*K^2 + a*F.K = -m*(8-r) - 2*a*delta
        return -self.m * self.K_sq - 2 * self.a * self.delta

    @property
    def c1_dot_fiber(self) -> int:
        return 2 * self.m * self.delta

    def polarized(self) -> PolarizedSurface:
        """The plain polarized-surface view (b = 0, fiber data forgotten)."""
        surface = SurfaceData(
            K_sq=self.K_sq,
            h2=0,
            point_degrees=self.point_degrees,
            char_zero=self.char_zero,
        )
        bundle = LineBundleClass(c1_sq=self.c1_sq, c1_dot_K=self.c1_dot_K)
        return PolarizedSurface(surface=surface, bundle=bundle, name=self.name)


@dataclass(frozen=True)
class BrauerSeveriData:
    """A two-dimensional Brauer-Severi variety, known only through its index.

    The index of such a surface is 1 or 3, and that single number drives
    the whole equivalence pipeline, so no intersection data is carried.
    """

    ind: int
    char_zero: bool = True
    name: str = "brauer-severi surface"

    def __post_init__(self):
        if self.ind not in (1, 3):
            raise ValidationError(
                "index of a Brauer-Severi surface must be 1 or 3", path="brauer_severi.ind"
            )


CATALOG_NAMES = (
    "projective_plane",
    "quadric",
    "del_pezzo",
    "conic_bundle",
    "brauer_severi",
)


def catalog(
    name: str,
    params: tuple[int, ...] = (),
    point_degrees: tuple[int, ...] = (1,),
    char_zero: bool = True,
) -> PolarizedSurface | ConicBundleData | BrauerSeveriData:
    """Build a standard example surface by name.

    projective_plane (no params) carries O(1); quadric (no params) the
    hyperplane bundle of the quadric in P^3; del_pezzo (degree,) the
    anticanonical bundle; conic_bundle (r, delta, m, a) the twisted
    anticanonical polarization; brauer_severi (ind,) index data only.
    """
    params = tuple(params)

    def expect(n: int):
        if len(params) != n:
            raise ValidationError(
                f"{name} takes exactly {n} parameter(s), got {len(params)}", path="params"
            )

    if name == "projective_plane":
        expect(0)
        surface = SurfaceData(K_sq=9, h2=0, point_degrees=point_degrees, char_zero=char_zero)
        bundle = LineBundleClass(c1_sq=1, c1_dot_K=-3, ample_asserted=True)
        return PolarizedSurface(surface, bundle, name="projective plane")
    if name == "quadric":
        expect(0)
        surface = SurfaceData(K_sq=8, h2=0, point_degrees=point_degrees, char_zero=char_zero)
        bundle = LineBundleClass(c1_sq=2, c1_dot_K=-4, ample_asserted=True)
        return PolarizedSurface(surface, bundle, name="quadric surface")
    if name == "del_pezzo":
        expect(1)
        degree = params[0]
        if not 1 <= degree <= 9:
            raise ValidationError("del Pezzo degree must be in [1, 9]", path="params[0]")
        surface = SurfaceData(K_sq=degree, h2=0, point_degrees=point_degrees, char_zero=char_zero)
        # anticanonical polarization: c1 = -K
        bundle = LineBundleClass(c1_sq=degree, c1_dot_K=-degree, ample_asserted=True)
        return PolarizedSurface(surface, bundle, name=f"del pezzo of degree {degree}")
    if name == "conic_bundle":
        expect(4)
        r, delta, m, a = params
        return ConicBundleData(
            r=r,
            delta=delta,
            m=m,
            a=a,
            point_degrees=point_degrees,
            char_zero=char_zero,
            name=f"conic bundle (r={r}, delta={delta}, m={m}, a={a})",
        )
    if name == "brauer_severi":
        expect(1)
        ind = params[0]
        return BrauerSeveriData(
            ind=ind, char_zero=char_zero, name=f"brauer-severi surface of index {ind}"
        )
    raise ValidationError(f"unknown catalog surface {name!r}", path="name")


def tensor_power(bundle: LineBundleClass, e: int) -> LineBundleClass:
    """Numerical class of the e-th tensor power, e >= 1."""
    if e < 1:
        raise ValidationError("tensor power needs e >= 1", path="e")
    return LineBundleClass(
        c1_sq=e * e * bundle.c1_sq,
        c1_dot_K=e * bundle.c1_dot_K,
        ample_asserted=bundle.ample_asserted,
    )


def blow_up(polarized: PolarizedSurface, e: int, d_prime: int) -> PolarizedSurface:
    """Blow up a degree-d' point and descend the e-th power of the bundle.

    The new class is (pullback of L^e) - 2E where E is the exceptional
    divisor, E^2 = -d'. Ampleness does not descend (the class is merely
    big for large e), so the result never asserts it.
    """
    if e < 1:
        raise ValidationError("blow-up transform needs e >= 1", path="e")
    if d_prime <= 0:
        raise ValidationError("blow-up center must have positive degree", path="d_prime")
    surface = replace(polarized.surface, K_sq=polarized.K_sq - d_prime)
    bundle = LineBundleClass(
        c1_sq=e * e * polarized.c1_sq - 4 * d_prime,
        c1_dot_K=e * polarized.c1_dot_K + 2 * d_prime,
        ample_asserted=False,
    )
    return PolarizedSurface(surface, bundle, name=f"{polarized.name}, blown up (d'={d_prime})")
