#!/usr/bin/env python3
"""Validation of JSON verification reports against the report model."""
from __future__ import annotations

import json
from typing import Any, Dict, Optional, Tuple

from pydantic import ValidationError

from cmlab.reports import REPORT_KEYS, VerificationReport


class ValidationCode:
	OK = "OK"
	STRUCTURE = "STRUCTURE"
	FIELDS = "FIELDS"


ValidationResult = Tuple[bool, str]


def validate_report_payload(data: Any) -> Tuple[ValidationResult, Optional[VerificationReport], str]:
	if not isinstance(data, dict):
		return (False, ValidationCode.STRUCTURE), None, "report must be a JSON object"
	keys = set(data)
	if keys != set(REPORT_KEYS):
		missing = sorted(set(REPORT_KEYS) - keys)
		extra = sorted(keys - set(REPORT_KEYS))
		return (False, ValidationCode.STRUCTURE), None, f"missing keys {missing}, unexpected keys {extra}"
	if type(data["elapsed_ms"]) is not int:
		return (False, ValidationCode.FIELDS), None, "elapsed_ms must be an integer"
	try:
		model = VerificationReport.model_validate(data)
		return (True, ValidationCode.OK), model, ""
	except ValidationError as e:
		return (False, ValidationCode.FIELDS), None, str(e)


def validate_report_json(text: str) -> Tuple[ValidationResult, Optional[VerificationReport], str]:
	try:
		data = json.loads(text)
	except json.JSONDecodeError as e:
		return (False, ValidationCode.STRUCTURE), None, f"invalid JSON: {e}"
	return validate_report_payload(data)


def report_json_schema() -> Dict[str, Any]:
	"""JSON Schema of a serialized report (the five public keys)."""
	schema = VerificationReport.model_json_schema()
	props = schema.get("properties", {})
	for key in list(props):
		if key not in REPORT_KEYS:
			props.pop(key)
	schema["required"] = list(REPORT_KEYS)
	schema["additionalProperties"] = False
	return schema
