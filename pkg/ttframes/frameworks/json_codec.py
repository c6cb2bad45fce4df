import json
from typing import Any, Dict

from pydantic import ValidationError

from ttframes.entities.exceptions import SystemFormatError
from ttframes.entities.tensor_entities import ObjectId, TensorSystem
from ttframes.usecases.dtos import schema_tag
from ttframes.usecases.interfaces.framework_interfaces import DocumentEmitterInterface
from ttframes.usecases.structure_documents import system_document


def dumps(document: Dict[str, Any]) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(document, indent=2, ensure_ascii=False, sort_keys=True) + "\n"


def tagged(kind: str, document: Dict[str, Any]) -> Dict[str, Any]:
    return {"schema": schema_tag(kind), **document}


def system_to_json(system: TensorSystem) -> str:
    return dumps(tagged("system", system_document(system)))


def system_from_dict(document: Dict[str, Any]) -> TensorSystem:
    """
    Rebuild a system from its JSON document.

    Raises:
        SystemFormatError: wrong schema, missing fields or inconsistent tables
    """
    if document.get("schema") != schema_tag("system"):
        raise SystemFormatError(f"expected schema {schema_tag('system')}, got {document.get('schema')!r}")
    try:
        return TensorSystem(
            objects=tuple(ObjectId(index=i, label=label) for i, label in enumerate(document["objects"])),
            zero=document.get("zero", 0),
            unit=document["unit"],
            shift=tuple(document["shift"]),
            sum=tuple(tuple(row) for row in document["sum"]),
            tensor=tuple(tuple(row) for row in document["tensor"]),
            triangles=tuple(tuple(t) for t in document.get("triangles", [])),
            summands=tuple(tuple(p) for p in document.get("summands", [])),
        )
    except KeyError as e:
        raise SystemFormatError(f"system document is missing {e.args[0]!r}") from e
    except (TypeError, ValidationError) as e:
        raise SystemFormatError(f"invalid system document: {e}") from e


def system_from_json(text: str) -> TensorSystem:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise SystemFormatError(e.msg, e.lineno, e.colno) from e
    if not isinstance(document, dict):
        raise SystemFormatError("system document must be a JSON object")
    return system_from_dict(document)


class JsonDocumentEmitter(DocumentEmitterInterface):
    def render(self, kind: str, document: Dict[str, Any]) -> str:
        return dumps(tagged(kind, document))
