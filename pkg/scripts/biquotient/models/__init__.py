from .hilbert_table import HilbertTable
from .cohomology_report import CohomologyReport
from .verification_report import DegreeVerdict, VerificationReport
from .run_config import RunConfig
