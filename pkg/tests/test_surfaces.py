"""Input-side checks: catalog data, validation, tensor powers, blow-ups."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hilbstab import (
    BrauerSeveriData,
    ConicBundleData,
    LineBundleClass,
    PolarizedSurface,
    SurfaceData,
    ValidationError,
    blow_up,
    catalog,
    tensor_power,
)
from hilbstab.surfaces import CATALOG_NAMES


class TestSurfaceData:
    def test_defaults(self):
        s = SurfaceData(K_sq=9, h2=0)
        assert s.point_degrees == (1,)
        assert s.char_zero is True

    def test_negative_h2_rejected(self):
        with pytest.raises(ValidationError):
            SurfaceData(K_sq=0, h2=-1)

    def test_empty_degrees_rejected(self):
        with pytest.raises(ValidationError):
            SurfaceData(K_sq=0, h2=0, point_degrees=())

    @pytest.mark.parametrize("bad", [0, -2, True, 1.5, "1"])
    def test_bad_degree_rejected(self, bad):
        with pytest.raises(ValidationError):
            SurfaceData(K_sq=0, h2=0, point_degrees=(bad,))


class TestLineBundleClass:
    def test_ample_needs_positive_self_intersection(self):
        with pytest.raises(ValidationError):
            LineBundleClass(c1_sq=0, c1_dot_K=-3, ample_asserted=True)
        with pytest.raises(ValidationError):
            LineBundleClass(c1_sq=-4, c1_dot_K=-1, ample_asserted=True)

    def test_non_ample_allows_anything(self):
        b = LineBundleClass(c1_sq=-4, c1_dot_K=2)
        assert b.ample_asserted is False


class TestCatalog:
    def test_names_listed(self):
        assert set(CATALOG_NAMES) == {
            "projective_plane",
            "quadric",
            "del_pezzo",
            "conic_bundle",
            "brauer_severi",
        }

    def test_projective_plane(self):
        p2 = catalog("projective_plane")
        assert isinstance(p2, PolarizedSurface)
        assert (p2.c1_sq, p2.c1_dot_K, p2.K_sq, p2.h2) == (1, -3, 9, 0)
        assert p2.bundle.ample_asserted

    def test_quadric(self):
        q = catalog("quadric")
        assert (q.c1_sq, q.c1_dot_K, q.K_sq, q.h2) == (2, -4, 8, 0)
        assert q.bundle.ample_asserted

    @pytest.mark.parametrize("deg", range(1, 10))
    def test_del_pezzo_anticanonical(self, deg):
        dp = catalog("del_pezzo", (deg,))
        assert (dp.c1_sq, dp.c1_dot_K, dp.K_sq) == (deg, -deg, deg)
        assert dp.h2 == 0
        assert dp.bundle.ample_asserted

    @pytest.mark.parametrize("deg", [0, 10, -1])
    def test_del_pezzo_degree_out_of_range(self, deg):
        with pytest.raises(ValidationError):
            catalog("del_pezzo", (deg,))

    def test_conic_bundle(self):
        cb = catalog("conic_bundle", (9, 1, 1, 1))
        assert isinstance(cb, ConicBundleData)
        assert cb.K_sq == -1
        assert cb.c1_sq == 3
        assert cb.c1_dot_K == -1
        assert cb.c1_dot_fiber == 2
        assert cb.fiber_dot_K == -2

    def test_brauer_severi(self):
        bs = catalog("brauer_severi", (3,))
        assert isinstance(bs, BrauerSeveriData)
        assert bs.ind == 3
        with pytest.raises(ValidationError):
            catalog("brauer_severi", (2,))

    def test_unknown_name(self):
        with pytest.raises(ValidationError):
            catalog("elliptic_fibration")

    def test_wrong_param_count(self):
        with pytest.raises(ValidationError):
            catalog("del_pezzo")
        with pytest.raises(ValidationError):
            catalog("projective_plane", (1,))

    def test_degrees_forwarded(self):
        p2 = catalog("projective_plane", point_degrees=(2, 3))
        assert p2.surface.point_degrees == (2, 3)


class TestConicBundleData:
    def test_validation(self):
        with pytest.raises(ValidationError):
            ConicBundleData(r=-1, delta=1, m=1, a=1)
        with pytest.raises(ValidationError):
            ConicBundleData(r=9, delta=0, m=1, a=1)
        with pytest.raises(ValidationError):
            ConicBundleData(r=9, delta=1, m=0, a=1)

    def test_polarized_view(self):
        cb = ConicBundleData(r=9, delta=1, m=1, a=1)
        p = cb.polarized()
        assert (p.c1_sq, p.c1_dot_K, p.h2) == (3, -1, 0)
        assert not p.bundle.ample_asserted

    @given(
        r=st.integers(min_value=0, max_value=12),
        delta=st.integers(min_value=1, max_value=8),
        m=st.integers(min_value=1, max_value=8),
        a=st.integers(min_value=-8, max_value=8),
    )
    def test_invariants_always_have_even_sum(self, r, delta, m, a):
        # c1^2 + c1.K = m(m-1)(8-r) + 2*delta*(2am - a - m) is even for
        # all integer inputs, so the half-integer formulas never fracture.
        cb = ConicBundleData(r=r, delta=delta, m=m, a=a)
        assert (cb.c1_sq + cb.c1_dot_K) % 2 == 0


class TestTensorPower:
    def test_square(self):
        b = tensor_power(LineBundleClass(1, -3, ample_asserted=True), 2)
        assert (b.c1_sq, b.c1_dot_K) == (4, -6)
        assert b.ample_asserted

    def test_power_must_be_positive(self):
        with pytest.raises(ValidationError):
            tensor_power(LineBundleClass(1, -3), 0)


class TestBlowUp:
    def test_plane_one_point(self):
        p2 = catalog("projective_plane")
        bl = blow_up(p2, e=1, d_prime=1)
        assert (bl.c1_sq, bl.c1_dot_K, bl.K_sq, bl.h2) == (-3, -1, 8, 0)
        assert not bl.bundle.ample_asserted

    def test_del_pezzo_example(self):
        dp1 = catalog("del_pezzo", (1,))
        bl = blow_up(dp1, e=8, d_prime=2)
        assert (bl.c1_sq, bl.c1_dot_K, bl.K_sq) == (56, -4, -1)

    def test_name_suffix(self):
        dp1 = catalog("del_pezzo", (1,))
        assert "blow" in blow_up(dp1, 2, 1).name

    def test_validation(self):
        p2 = catalog("projective_plane")
        with pytest.raises(ValidationError):
            blow_up(p2, e=0, d_prime=1)
        with pytest.raises(ValidationError):
            blow_up(p2, e=1, d_prime=0)

    @given(
        c1_sq=st.integers(min_value=-20, max_value=20),
        c1_dot_K=st.integers(min_value=-20, max_value=20),
        e=st.integers(min_value=1, max_value=10),
        d_prime=st.integers(min_value=1, max_value=10),
    )
    def test_parity_preserved(self, c1_sq, c1_dot_K, e, d_prime):
        if (c1_sq + c1_dot_K) % 2 != 0:
            c1_dot_K += 1
        surf = PolarizedSurface(
            SurfaceData(K_sq=0, h2=0), LineBundleClass(c1_sq, c1_dot_K)
        )
        bl = blow_up(surf, e=e, d_prime=d_prime)
        assert (bl.c1_sq + bl.c1_dot_K) % 2 == 0
