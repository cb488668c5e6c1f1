"""Slow textbook versions used as test oracles.

They go through formula substitution and classification instead of the
truth-table cache in :mod:`strongadf.adf`.
"""

from strongadf.formula import FormulaClass, classify, partial_valuation
from strongadf.interpretation import F, T, U, Interpretation, all_interpretations

_STATUS = {FormulaClass.TAUTOLOGY: T, FormulaClass.UNSATISFIABLE: F, FormulaClass.CONTINGENT: U}


def gamma(adf, v):
    return Interpretation(
        adf.arguments,
        tuple(_STATUS[classify(partial_valuation(adf.conditions[a], v))] for a in adf.arguments),
    )


def admissible(adf, v):
    return v <= gamma(adf, v)


def conflict_free(adf, v):
    g = gamma(adf, v)
    # t needs a satisfiable condition, f an unsatisfiable one
    return all((g[a] is not F) if v[a] is T else (g[a] is F) for a in adf.arguments if v[a] is not U)


def preferred(adf):
    adm = [v for v in all_interpretations(adf.arguments) if admissible(adf, v)]
    return [v for v in adm if not any(v < w for w in adm)]


def grounded(adf):
    v = Interpretation(adf.arguments, (U,) * len(adf.arguments))
    while (nxt := gamma(adf, v)) != v:
        v = nxt
    return v
