''' Special-transformation calculus on positive group presentations:
subword reversing, Dehn transformations, derivation search, Cayley
fragment certificates, monoid divisibility, and constructive elimination
of trivial-pair insertions for right-angled presentations.
'''

from .core import (Presentation, CoxeterMatrix, artin_presentation, parse_word,
	render_word, parse_positive, invert, free_reduce, validate,
	parse_presentation_text, load_presentation)
from .rewrite import (Step, Derivation, DehnStep, applicable_steps, apply_step,
	check_derivation, dehn_steps, apply_dehn, simulate_type2)
from .reversing import (right_reverse, left_reverse, right_fraction,
	left_fraction, word_problem_spherical, completeness_check,
	completeness_sample)
from .monoid import (equiv_class, canonical, pos_equal, left_divisors,
	right_divides, right_lcm, is_S0_minimal, strip_S0, coset_head_spherical)
from .cayley import (divisor_fragment, traced_from, closure_probe,
	non_reachability_certificate, to_dot)
from .search import (SearchLimits, SearchOutcome, bounded_derivation_search,
	is_dead, dehn_run, dehn_to_special)
from .raag import (phi, pi_h, to_aug, lift_derivation, is_regular,
	apply_aug_step, check_aug_derivation, project_step, eliminate_infinity,
	raag_word_problem, generate_01inf_derivation)

__version__ = '0.1.0'
