from .formatter import (
    batch_summary_text, cohomology_text, hilbert_line, render_batch, render_cohomology,
    render_hilbert, to_json, verification_text,
)
from .writer import append_step_summary, write_output, write_report_dir
