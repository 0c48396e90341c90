"""Module containing the JSON and markdown renderers for reports and report sections"""
import json
import pathlib
from functools import lru_cache
from itertools import groupby
from typing import Any, Dict, List

import jsonschema

from .models import VerificationReport, to_jsonable

SCHEMA_PATH = pathlib.Path(__file__).parent / 'schema' / 'verification_report.schema.json'


@lru_cache(maxsize=1)
def report_schema() -> Dict[str, Any]:
    with open(SCHEMA_PATH) as schema_file:
        return json.load(schema_file)


def validate_report_data(data: Dict[str, Any]) -> None:
    """Raises jsonschema.ValidationError when the data does not follow the shipped schema"""
    jsonschema.validate(instance=data, schema=report_schema())


def _dumps(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + '\n'


def render_json(report: VerificationReport) -> str:
    data = to_jsonable(report.as_data())
    validate_report_data(data)
    return _dumps(data)


def _cell(value: Any) -> str:
    if isinstance(value, str):
        text = value
    else:
        text = json.dumps(to_jsonable(value), sort_keys=True, ensure_ascii=False)
    return text.replace('|', '\\|').replace('\n', ' ')


def render_markdown(report: VerificationReport) -> str:
    lines: List[str] = [f'# cubicfold verification report (version {report.tool_version})', '']

    lines.append('| status | count |')
    lines.append('|---|---|')
    for status, count in report.status_counts().items():
        lines.append(f'| {status} | {count} |')
    lines.append('')

    lines.append(f'Catalog entries: {", ".join(report.catalog_entries)}')
    lines.append('')

    for group, records in groupby(report.records, key=lambda record: record.group):
        lines.extend([f'## {group}', '', '| claim | location | expected | computed | status | notes |',
                      '|---|---|---|---|---|---|'])
        for record in records:
            lines.append(f'| {record.claim_id} | {_cell(record.location)} | {_cell(record.expected)} | '
                         f'{_cell(record.computed)} | **{record.status}** | {_cell("; ".join(record.notes))} |')
        lines.append('')

    if report.timing:
        lines.extend(['## timing', ''] + [f'- {key}: {value:.3f} s' for key, value in sorted(report.timing.items())])
        lines.append('')
    return '\n'.join(lines)


def render(report: VerificationReport, output_format: str) -> str:
    if output_format == 'md':
        return render_markdown(report)
    return render_json(report)


def render_section(title: str, data: Dict[str, Any], output_format: str) -> str:
    """Output of the single-purpose subcommands: a JSON object or a markdown list under a heading"""
    data = to_jsonable(data)
    if output_format != 'md':
        return _dumps({title: data})

    lines = [f'## {title}', '']
    for key, value in data.items():
        if isinstance(value, list) and value and all(isinstance(row, dict) for row in value):
            columns = list(value[0])
            lines.extend([f'### {key}', '', '| ' + ' | '.join(columns) + ' |',
                          '|' + '---|' * len(columns)])
            lines.extend('| ' + ' | '.join(_cell(row.get(column)) for column in columns) + ' |' for row in value)
            lines.append('')
        else:
            lines.append(f'- {key}: {_cell(value)}')
    lines.append('')
    return '\n'.join(lines)


