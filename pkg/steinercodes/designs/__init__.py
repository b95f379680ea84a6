"""
Support designs of the extended codes and their duals

* `extract_weight4_blocks`, `extract_blocks_by_enumeration`: block extraction
* `verify_design`: exact coverage counting, the empirical check of every λ
* `dual_design_params`, `code_design_params`, `wt6_lambda`, `wt8_lambda`: closed-form design parameters
* `am_check`: the Assmus-Mattson condition
* `write_blocks`, `read_blocks`: block files
"""
from ._blockfile import write_blocks, read_blocks, format_blocks, parse_blocks, blocks_to_json, FORMAT_TEXT, \
    FORMAT_JSON
from ._coverage import verify_design, pair_counts, CoverageReport, MAX_OFFENDING
from ._design import Design, DesignParams
from ._extract import extract_weight4_blocks, extract_blocks_by_enumeration, extract_designs_by_enumeration, \
    affine_image, expected_weight4_count
from ._params import lambda_from_count, dual_design_params, code_design_params, support_design_params, \
    wt6_lambda, wt8_lambda, lambda_identities, LambdaIdentity, am_check, AMReport, check_steiner_hypothesis

__all__ = [
    'Design', 'DesignParams',
    'extract_weight4_blocks', 'extract_blocks_by_enumeration', 'extract_designs_by_enumeration', 'affine_image',
    'expected_weight4_count',
    'verify_design', 'pair_counts', 'CoverageReport', 'MAX_OFFENDING',
    'lambda_from_count', 'dual_design_params', 'code_design_params', 'support_design_params', 'wt6_lambda',
    'wt8_lambda', 'lambda_identities', 'LambdaIdentity', 'am_check', 'AMReport', 'check_steiner_hypothesis',
    'write_blocks', 'read_blocks', 'format_blocks', 'parse_blocks', 'blocks_to_json', 'FORMAT_TEXT', 'FORMAT_JSON',
]
