"""Kernel selection and python/compiled bit-identity."""

import pytest

from tstar.backend import available_backends, default_backend, kernel_for
from tstar.precision import make_context
from tstar.series import FamilyKind, SeriesFamily, extend_trace, partial_sum

CTX = make_context(25)

needs_compiled = pytest.mark.skipif(
    "compiled" not in available_backends(), reason="compiled kernel unavailable"
)


class TestSelection:
    def test_python_always_available(self):
        assert "python" in available_backends()
        assert kernel_for("python").BACKEND_NAME == "python"

    def test_default_resolution(self):
        assert default_backend() in available_backends()
        assert kernel_for(None).BACKEND_NAME == default_backend()
        assert kernel_for("auto").BACKEND_NAME == default_backend()

    def test_unknown_backend(self):
        with pytest.raises(ValueError):
            kernel_for("fortran")

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("TSTAR_KERNEL", "python")
        assert default_backend() == "python"
        monkeypatch.setenv("TSTAR_KERNEL", "nonsense")
        with pytest.raises(ValueError):
            default_backend()


@needs_compiled
class TestBitIdentity:
    @pytest.mark.parametrize("kind", list(FamilyKind))
    @pytest.mark.parametrize("depth", [0, 1, 4])
    def test_partial_sums_identical(self, kind, depth):
        fam = SeriesFamily(kind, depth)
        cps = (100, 1000, 4096)
        py = partial_sum(fam, 4096, CTX, checkpoints=cps, backend="python")
        cc = partial_sum(fam, 4096, CTX, checkpoints=cps, backend="compiled")
        for (na, sa), (nb, sb) in zip(py.checkpoints, cc.checkpoints):
            assert na == nb
            assert sa == sb  # bit identical, not just close
        star_py, w_py, acc_py, _ = py.final_state
        star_cc, w_cc, acc_cc, _ = cc.final_state
        assert star_py == star_cc
        assert w_py == w_cc and acc_py == acc_cc

    def test_resume_crosses_backends(self):
        # a trace streamed by one kernel extends under the other with
        # identical numbers, because both apply the same op sequence
        fam = SeriesFamily(FamilyKind.TSTAR, 2)
        base_py = partial_sum(fam, 512, CTX, checkpoints=(512,), backend="python")
        base_cc = partial_sum(fam, 512, CTX, checkpoints=(512,), backend="compiled")
        ext_py = extend_trace(base_py, 2048)
        ext_cc = extend_trace(base_cc, 2048)
        assert ext_py.checkpoints == ext_cc.checkpoints
        assert ext_py.final_state[0] == ext_cc.final_state[0]

    def test_kernels_expose_same_interface(self):
        py = kernel_for("python")
        cc = kernel_for("compiled")
        assert callable(py.run_stream) and callable(cc.run_stream)
        assert py.BACKEND_NAME != cc.BACKEND_NAME
