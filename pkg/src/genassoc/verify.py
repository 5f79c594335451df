"""The complete verification suite for one type, aggregated into a Report."""

from __future__ import annotations

from .clusters import check_clusters, enumerate_clusters, expansion_uniqueness_check
from .compat import check_e_set, check_second_term
from .polytope import build_support_function, certificate_check, realize
from .report import ConsistencyError, Report
from .tau import check_periodicity


def run_suite(catalog, F=None, full=False, seed=0, threads=1) -> Report:
    """Periodicity, clusters, second-term signs, realization and certificates.

    ``full`` adds the lattice-box expansion check and, for rank <= 5, the
    brute-force E-set dichotomy.
    """
    rep = Report(f"verify {catalog.cartan_type}")
    rep.extend(check_periodicity(catalog))
    try:
        clusters = enumerate_clusters(catalog, threads)
    except ConsistencyError as e:
        rep.add("cluster enumeration", False, str(e))
        return rep
    rep.extend(check_clusters(catalog, clusters))
    rep.extend(check_second_term(catalog))
    if F is None:
        F = build_support_function(catalog)
    try:
        real = realize(catalog, F, clusters)
        rep.extend(real.report)
    except ConsistencyError as e:
        rep.add("realization", False, str(e))
    rep.extend(certificate_check(catalog))
    if full:
        rep.extend(expansion_uniqueness_check(catalog, seed=seed, clusters=clusters))
        if catalog.rank <= 5:
            rep.extend(check_e_set(catalog))
    return rep
