from .config import Config, ConfigError, REPORT_ENV, load_config, parse_config
from .registry import (
    Check, CheckResult, Outcome, UnknownCheck, TAGS, claim_manifest, coverage_gaps, exit_status, registry, resolve, run_checks, run_one,
)
from .report import SCHEMA, emit_report, report_dict
