import random

from laurent_eulerian.algebra import MultiPoly


def random_poly(rng: random.Random, nvars: int, offset: int, field,
                max_terms: int = 4, max_exp: int = 3, coeff_range: int = 20) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exps = tuple(rng.randint(0, max_exp) for _ in range(nvars))
        c = rng.randint(-coeff_range, coeff_range)
        terms[exps] = terms.get(exps, 0) + c
    return MultiPoly(terms, nvars, offset, field)
