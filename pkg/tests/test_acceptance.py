"""Acceptance criteria 1-9.  Each test prints one PASS/FAIL line and then asserts."""
import pytest

from sympclif import suites as S

LINES = []


@pytest.fixture
def report(capsys):
    def _report(number: int, title: str, checks: dict):
        ok = all(flag for flag, _ in checks.values())
        failed = [f"{name}: {detail}" for name, (flag, detail) in checks.items() if not flag]
        line = f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'}"
        if failed:
            line += " -- " + "; ".join(failed)
        LINES.append(line)
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return _report


def _labelled(res, label):
    """Turn a ``(label, detail)`` check into ``(flag, detail)``."""
    status, rest = res
    if isinstance(rest, tuple):
        return rest
    return status == label, rest


def test_criterion_1_brackets(report):
    checks = {}
    for n in (1, 2, 3):
        checks[f"sl2_n{n}"] = S._sl2(n)
        checks[f"invariance_n{n}"] = S._invariance(n)
        checks[f"sp_closure_n{n}"] = S._antihom(n)
    checks["mp2_real"] = S._mp2_real()
    checks["mp2_complex"] = S._mp2_complex()
    report(1, "bracket suite, n in {1,2,3}, exact", checks)


def test_criterion_2_ds_squared(report):
    checks = {f"n{n}": S._ds_squared(n, 4) for n in (1, 2)}
    report(2, "Ds^2 (x_j m) = i dy_j m, Ds^2 (y_j m) = -i dx_j m, h <= 4", checks)


def test_criterion_3_projector_and_z(report):
    checks = {}
    for n in (1, 2):
        checks[f"projector_n{n}"] = S._projector(n, 4)
        checks[f"z_kernel_n{n}"] = S._z_kernel(n, 4)
    report(3, "projector and Z_l preserve monogenics, n in {1,2}", checks)


def test_criterion_4_symmetries(report):
    from sympclif.symmetry import nonclosure_check

    r = nonclosure_check()
    checks = {
        "dimension_7_and_span": S._symmetry_dim(3),
        "nonclosure": (r["witness_formula"] and r["outside_span"], str(r)),
    }
    report(4, "first-order symmetries at degree 3 and non-closure", checks)


def test_criterion_5_bases(report):
    from sympclif.bases import monogenics_by_nullspace
    from sympclif.symmetry import same_span

    checks = {"kernel_h6_k8": S._kernel_all(6, 8)}
    bad = []
    for h in range(4):
        for Q in range(10):
            ns = monogenics_by_nullspace(h, Q, 1)
            for family in ("complex", "real"):
                if not same_span(ns, S._closed_forms(h, Q, family)):
                    bad.append((h, Q, family))
    checks["nullspace_span_h3_Q9"] = (not bad, f"mismatches {bad[:4]}")
    report(5, "closed-form bases in the kernel; nullspace spans agree", checks)


def test_criterion_6_pairing(report):
    checks = {
        "adjoints_and_mp2_skew": S._adjoints(),
        "k_reproducing": S._k_reproduce(3),
        "z_reproducing": S._z_reproduce(3),
        "isotropy_float": S._isotropy_float(4, 6, 1e-9),
        "isotropy_exact": S._isotropy_exact(4, 6),
    }
    report(6, "adjoint relations, reproducing kernels, isotropy", checks)


def test_criterion_7_spectral(report):
    checks = {
        "eigen_j4_k3_n12": S._eigen(4, 3, (1, 2)),
        "exp_lemma_8": S._exp_lemma(8),
        "xs_power_k12": S._xs_powers(12),
    }
    report(7, "Laguerre eigenfunctions, exponential identity, Xs^k", checks)


def test_criterion_8_action_tables(report):
    checks = {
        "exact_rescaled": S._action_exact(4, 5),
        "float_normalized": S._action_float(4, 5),
    }
    report(8, "action tables h <= 4, |k| <= 5", checks)


def test_criterion_9_discrepancies(report):
    checks = {
        "moments_vs_quadrature": _labelled(S._moments(), "discrepancy"),
        "homogeneity2_table_rederived": _labelled(S._real_gram(), "re-derived"),
    }
    report(9, "documented discrepancies", checks)
