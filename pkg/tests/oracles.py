"""Cross-identity oracles shared by the registry tests and the acceptance run."""

from qwatson import registry
from qwatson.registry import eval_lhs, eval_rhs_closed, watson
from qwatson.sampler import SampleConfig, draw_point

CFG = SampleConfig(seed=2024)

LATTICE = [
    ("prop-a", "andrews-watson", "m0"),
    ("thm-a", "prop-a", "l0"),
    ("prop-b", "jain-watson", "m0"),
    ("thm-b", "prop-b", "l0"),
    ("thm-c", "prop-c", "l0"),
    ("thm-d", "bailey-dixon", "lm0"),
    ("thm-g", "another-dixon", "lm0"),
    ("thm-k", "andrews-whipple", "lm0"),
    ("thm-m", "jain-whipple", "lm0"),
]


def lattice_pairs(general, special, mode, n_max, points, cfg=CFG):
    """Yield (value of the general identity at the reduction, value of the special one)."""
    g, s = registry.get(general), registry.get(special)
    for n in range(n_max + 1):
        ms = range(0, min(n, 3) + 1) if mode == "l0" else [0]
        for m in ms:
            for idx in range(points):
                p = draw_point(cfg, n, 0, m, g, index=idx)
                yield n, eval_rhs_closed(g, p), eval_rhs_closed(s, p), eval_lhs(g, p), eval_lhs(s, p)


def parity_values(n_max, points, cfg=CFG):
    """(n, andrews-watson lhs, rhs, thm-a lhs, rhs) at shared points with ell = m = 0."""
    aw, ta = registry.get("andrews-watson"), registry.get("thm-a")
    for n in range(n_max + 1):
        for idx in range(points):
            p = draw_point(cfg, n, 0, 0, ta, index=idx)
            yield n, eval_lhs(aw, p), eval_rhs_closed(aw, p), eval_lhs(ta, p), eval_rhs_closed(ta, p)


def thm_a_readings(n_max=4, lm_max=2, cfg=CFG):
    """Counts of cells where the product reading and the two-equalities reading hold."""
    spec = registry.get("thm-a")
    product = chain = total = 0
    for n in range(n_max + 1):
        for ell in range(lm_max + 1):
            for m in range(lm_max + 1):
                p = spec.bind(draw_point(cfg, n, ell, m, spec))
                lhs = eval_lhs(spec, p)
                pref, dsum = watson.thm_a_prefactor(p), watson.thm_a_double_sum(p)
                total += 1
                product += lhs == pref * dsum
                chain += lhs == pref == dsum
    return product, chain, total
