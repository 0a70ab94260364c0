"""Argumentation networks compiled into strong-negation logic, with oracles."""

from .formula import (Atom, Formula, N, Not, Theory, atoms_of, evaluate_cn,
                      normalize_n, parse_formula, to_text)
from .frameworks import (AdfSpec, Af, BipolarAf, DisjAf, HigherAf, HigherAttack,
                         JointAf, parse_apx, parse_tgf, to_apx, validate)
from .models import (SizeCapError, entails, enumerate_models, grounded_by_entailment,
                     is_model, labelling_to_model, model_to_labelling)
from .oracle import (complete_labellings, disjunctive_labellings, grounded_fixpoint,
                     joint_labellings, preferred_labellings, stable_labellings)
from .reductions import higher_to_joint, joint_to_single, restrict_labelling
from .states import CNModel, Label, Labelling
from .translate import (delta_adf, delta_af, delta_bipolar, delta_disjunctive,
                        delta_higher_direct, delta_joint, stable_axioms, theta_n)
from .twoworld import (TwoWorldModel, cn_to_two_world, eval_world, find_countermodel,
                       inn_imp, inn_not, is_valid)

__version__ = "0.1.0"
