import hashlib
import json

from src.core.conversion import g_to_j
from src.core.scalars import format_decimal, format_exact


def value_hash(value):
    return hashlib.sha256(format_exact(value).encode("utf-8")).hexdigest()[:16]


def quantity_fields(g, instance, quantity, digits):
    """Ordered G/J fields: exact "p/q" strings followed by decimal renderings."""
    fields = {}
    if quantity in ("G", "both"):
        fields["G"] = format_exact(g)
        fields["G_decimal"] = format_decimal(g, digits)
    if quantity in ("J", "both"):
        j = g_to_j(g, instance)
        fields["J"] = format_exact(j)
        fields["J_decimal"] = format_decimal(j, digits)
    return fields


def render_result(result, instance, quantity, output, digits):
    payload = {"status": "ok"}
    payload.update(quantity_fields(result.value, instance, quantity, digits))
    payload["algorithm"] = result.algorithm
    payload["work"] = result.work.as_dict()
    if output == "json":
        return json.dumps(payload)
    lines = [f"{key}: {value}" for key, value in payload.items() if key not in ("status", "work")]
    lines.append("work: " + ", ".join(f"{key}={value}" for key, value in result.work.as_dict().items()))
    return "\n".join(lines)


def render_error(error, output):
    payload = {"status": "error"}
    payload.update(error.details())
    if output == "json":
        return json.dumps(payload)
    text = f"error: {error.code}: {error.message}"
    if payload.get("suggestion"):
        text += f" (try --algorithm {payload['suggestion']})"
    return text


def render_check(report, instance, output, digits):
    payload = report.as_dict(instance, digits)
    if output == "json":
        return json.dumps(payload)
    lines = [f"reference: {report.reference} G={payload['reference']['G']}"]
    for entry in payload["results"]:
        if entry["status"] == "ok":
            lines.append(f"{entry['algorithm']:<18} {entry['G']:<24} work={entry['work']}")
        else:
            lines.append(f"{entry['algorithm']:<18} skipped: {entry['reason']}")
    lines.append(f"agreement: {str(report.agreement).lower()}")
    return "\n".join(lines)
