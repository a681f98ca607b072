"""Prime splitting through Newton power sums.

f splits completely modulo a prime P (outside the primes dividing an
exclusion value E) exactly when T_{N(P)+1} == T_2 (mod P), where T_n is the
sum of the n-th powers of the roots of f.
"""

from .arith import Effort, Factorization, discriminant, exact_sqrt, factor_integer, is_prime, newton_bootstrap
from .criterion import (
    PrimeReport,
    ScanReport,
    TheoremViolation,
    Verdict,
    check_prime,
    congruence_test,
    oracle_split,
    principality_report,
    scan,
)
from .galois import (
    ClassProduct,
    ExclusionValue,
    c_sigma,
    class_product,
    closed_form_class,
    cycle_types,
    exclusion_value,
    group_product,
)
from .kernels import BACKEND
from .newton import NewtonSeq, term_exact, term_mod_matrix, term_mod_trace
from .nf import MonicPoly, NFElem, NumberField, ResiduePrime, nf_norm, reduce_elem, residue_primes_above
from .parse import ParseError, format_poly, parse_field, parse_poly

__version__ = "0.1.0"
