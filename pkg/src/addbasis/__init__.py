"""addbasis — exact decision procedures for additive bases.

Works with eventually periodic integer sets A = E ∪ {n >= N0 : n mod m in R}
and answers, in exact integer arithmetic: is A an additive basis, of what
order, which elements and finite subsets are essential, and do given
(possibly infinite) essentialities verify. A windowed brute-force sumset
oracle cross-checks the closed-form answers, and a seeded census grinds the
package's laws over random corpora.
"""

__version__ = "0.1.0"

from .basis import (BasisReport, analyze, basis_report, essential_elements,
                    is_basis, is_essential_element, order, remove_ok)
from .census import CensusConfig, CensusReport, random_basis, random_set, run_census
from .errors import (AddBasisError, EmptySet, EqualElements, GenerationExhausted,
                     IdenticalSubsets, InputError, InvalidDescription, InvalidInput,
                     InvalidRange, LawViolation, NotABasis, NotAMember, NotASubset,
                     ParseError, PreconditionError)
from .essentia import (CoprimalityReport, EssentialityCheck, EssentialSubset,
                       ProofTrace, avoiding_indices, coprimality_report,
                       diff_gcd_without, essential_subsets, proof_trace,
                       verify_essentiality)
from .intset import (EVENS, NATURALS, ODDS, PeriodicSet, canonicalize, difference,
                     from_json_dict, is_subset, parse_set, parse_text)
from .oracle import (EmpiricalOrder, SumsetWindow, brute_essential_subsets,
                     decompose, empirical_order, sumset_window)
from .primes import distinct_prime_factors, omega

__all__ = [
    "__version__",
    "AddBasisError", "InputError", "PreconditionError", "LawViolation",
    "InvalidDescription", "InvalidInput", "InvalidRange", "ParseError",
    "GenerationExhausted", "NotABasis", "NotASubset", "NotAMember",
    "EqualElements", "IdenticalSubsets", "EmptySet",
    "PeriodicSet", "canonicalize", "difference", "is_subset", "parse_set",
    "parse_text", "from_json_dict", "NATURALS", "EVENS", "ODDS",
    "BasisReport", "basis_report", "is_basis", "analyze", "order",
    "remove_ok", "is_essential_element", "essential_elements",
    "EssentialSubset", "EssentialityCheck", "CoprimalityReport", "ProofTrace",
    "diff_gcd_without", "essential_subsets", "verify_essentiality",
    "avoiding_indices", "coprimality_report", "proof_trace",
    "SumsetWindow", "EmpiricalOrder", "sumset_window", "empirical_order",
    "decompose", "brute_essential_subsets",
    "CensusConfig", "CensusReport", "random_set", "random_basis", "run_census",
    "distinct_prime_factors", "omega",
]
