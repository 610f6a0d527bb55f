"""
Deterministic JSON output shared by the management commands and the API.
"""
import json
import logging
from pathlib import Path

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1


def versioned(payload):
    return {'v': SCHEMA_VERSION, **payload}


def to_json(payload):
    return json.dumps(versioned(payload), sort_keys=True, separators=(',', ':'))


def dump_report(payload, out=None, stdout=None):
    """Write one top-level JSON object to ``out`` (a path) or to ``stdout``"""
    text = to_json(payload)
    if out:
        Path(out).write_text(text + '\n', encoding='utf-8')
        logger.info(f"Report written to {out}")
    elif stdout is not None:
        stdout.write(text)
    return text


class JsonLinesWriter:
    """One JSON object per line; ``None`` as path writes nowhere but still counts."""

    def __init__(self, path=None):
        self.path = Path(path) if path else None
        self.count = 0
        self._handle = None

    def __enter__(self):
        if self.path is not None:
            self._handle = self.path.open('w', encoding='utf-8')
        return self

    def write(self, record):
        if self._handle is not None:
            self._handle.write(to_json(record) + '\n')
        self.count += 1

    def __exit__(self, exc_type, exc, tb):
        if self._handle is not None:
            self._handle.close()
            logger.info(f"{self.count} records written to {self.path}")
        return False
