'''Deterministic CSV and JSON output for penning results.

Every document carries ``schema: 1`` and a metadata block (tool version,
parameters, whether the inputs were exact).  CSV files put the metadata in
leading ``# key: value`` lines.  Fractions render as ``p/q`` strings, floats
with 15 significant digits; nothing time- or host-dependent is written, so
identical inputs give byte-identical output.
'''
from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Literal, Sequence

import numpy as np

from penning.logger import Logger

__all__ = ['SCHEMA_VERSION', 'format_value', 'to_jsonable', 'OutputEnvelope']

SCHEMA_VERSION = 1

Format = Literal['csv', 'json']


def format_value(value: Any) -> str:
    '''Text for one CSV cell.'''
    if value is None:
        return ''
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return str(value)
        text = f'{value:.15g}'
        return '0' if text == '-0' else text
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return str(value)


def to_jsonable(value: Any) -> Any:
    '''Plain JSON types; Fractions become ``p/q`` strings, floats are rounded to 15 digits.'''
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return str(value)
        return float(f'{value:.15g}')
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return str(value)


@dataclass
class OutputEnvelope:
    '''Where and how one command writes its result.

    Args:
        command: subcommand name, recorded in the metadata.
        format: ``'csv'`` or ``'json'``.
        destination: file path, or ``None`` for standard output.
        metadata: extra header entries in insertion order.
    '''
    command: str
    format: Format = 'csv'
    destination: Path | None = None
    metadata: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.format not in ('csv', 'json'):
            raise ValueError(f'Unknown output format {self.format!r}')
        if self.destination is not None:
            self.destination = Path(self.destination)

    def header(self) -> dict[str, Any]:
        from penning import __version__

        return {'schema': SCHEMA_VERSION, 'tool': 'penning-trap', 'version': __version__,
                'command': self.command, **self.metadata}

    # ------------------------------------------------------------------------
    # rendering
    # ------------------------------------------------------------------------
    def render_table(self, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        rows = list(rows)
        if self.format == 'json':
            return self.render_document({'columns': list(columns), 'rows': [list(r) for r in rows]})
        buf = io.StringIO()
        for key, value in self.header().items():
            buf.write(f'# {key}: {_meta_text(value)}\n')
        writer = csv.writer(buf, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
        return buf.getvalue()

    def render_document(self, payload: Any) -> str:
        if self.format == 'csv':
            raise ValueError(f'{self.command} output is a document; use --format json')
        document = {**self.header(), 'data': payload}
        return json.dumps(to_jsonable(document), indent=2, ensure_ascii=False) + '\n'

    # ------------------------------------------------------------------------
    # writing
    # ------------------------------------------------------------------------
    def emit(self, text: str) -> None:
        if self.destination is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        self.destination.parent.mkdir(parents=True, exist_ok=True)
        self.destination.write_text(text, encoding='utf-8', newline='\n')
        Logger.info(f'{self.command}: wrote {self.destination}')

    def write_table(self, columns: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
        self.emit(self.render_table(columns, rows))

    def write_document(self, payload: Any) -> None:
        self.emit(self.render_document(payload))


def _meta_text(value: Any) -> str:
    if isinstance(value, (dict, list, tuple)):
        return json.dumps(to_jsonable(value), separators=(',', ':'))
    return format_value(value)
