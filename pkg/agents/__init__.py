from agents.base_check import BaseCheck, CheckOutcome, RunOptions
from agents.proposition_check import PropositionCheck
from agents.theorem_check import TheoremCheck
from agents.triangle_check import TriangleIdentityCheck
from agents.circumference_check import CircumferenceBoundCheck
from agents.tel_check import TelCatalogCheck, TelOracleCheck
from agents.girth_check import GirthControlCheck
from agents.tightness_check import TightnessCheck
from agents.lemma_check import LemmaCheck
