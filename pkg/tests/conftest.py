import pytest

from tauslice import fixtures as fixdata


def _session_algebra(name):
    @pytest.fixture(scope="session", name=name)
    def fx():
        return fixdata.algebra(name)
    return fx


# shared algebra instances so AR-quiver / translate caches amortise
a2 = _session_algebra("a2")
a3 = _session_algebra("a3")
ex1 = _session_algebra("ex1")
ex2 = _session_algebra("ex2")
fig1 = _session_algebra("fig1")
fig2 = _session_algebra("fig2")
fig3 = _session_algebra("fig3")
ex5_tilde = _session_algebra("ex5_tilde")
ex5_a = _session_algebra("ex5_a")
ex5_aprime = _session_algebra("ex5_aprime")
ex5_c = _session_algebra("ex5_c")


@pytest.fixture(scope="session")
def algebras(a2, a3, ex1, ex2, fig1, fig2, fig3, ex5_tilde, ex5_a,
             ex5_aprime, ex5_c):
    return {
        "a2": a2, "a3": a3, "ex1": ex1, "ex2": ex2, "fig1": fig1,
        "fig2": fig2, "fig3": fig3, "ex5_tilde": ex5_tilde, "ex5_a": ex5_a,
        "ex5_aprime": ex5_aprime, "ex5_c": ex5_c,
    }


@pytest.fixture(scope="session")
def suite_results(algebras):
    """Run every structural suite over every slice fixture exactly once."""
    import properties
    return {fn.__name__: fn(algebras) for fn in properties.ALL_SUITES}
