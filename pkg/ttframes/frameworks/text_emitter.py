from typing import Any, Dict, List

from ttframes.usecases.interfaces.framework_interfaces import DocumentEmitterInterface


class TextDocumentEmitter(DocumentEmitterInterface):
    """Indented ``key: value`` rendering for terminals."""

    INDENT = "  "

    def render(self, kind: str, document: Dict[str, Any]) -> str:
        lines = [f"# {kind}"]
        if kind == "suite":
            lines.extend(self._suite(document))
        elif kind == "campaign":
            lines.extend(self._campaign(document))
        else:
            lines.extend(self._mapping(document, 0))
        return "\n".join(lines) + "\n"

    def _suite(self, document: Dict[str, Any]) -> List[str]:
        lines = [f"system: {document['system']}"]
        if not document.get("success", True):
            return lines + [f"error: {document['error']}"]
        for theorem in document["theorems"]:
            line = f"{theorem['status']:<8} {theorem['name']} ({theorem['checks']} checks)"
            if "reason" in theorem:
                line += f": {theorem['reason']}"
            if "error" in theorem:
                line += f": {theorem['error']}"
            lines.append(line)
            for failure in theorem["failures"]:
                lines.append(f"{self.INDENT}failed: {failure['label']}")
            one_sided = theorem.get("data", {}).get("orientation_mismatches")
            if one_sided:
                lines.append(f"{self.INDENT}one-sided triangle axiom: supports {', '.join(map(str, one_sided))}")
        counts = ", ".join(f"{count} {status.lower()}" for status, count in sorted(document["counts"].items()))
        lines.append(f"summary: {counts}")
        return lines

    def _campaign(self, document: Dict[str, Any]) -> List[str]:
        lines = []
        for suite in document["seeds"]:
            if not suite.get("success", True):
                lines.append(f"{suite['system']}: error: {suite['error']}")
                continue
            counts = ", ".join(f"{count} {status.lower()}" for status, count in sorted(suite["counts"].items()))
            verdict = "ok" if suite["passed"] else "FAILED"
            lines.append(f"{suite['system']}: {verdict} ({counts})")
        lines.append(f"seeds: {len(document['seeds'])}, failed: {len(document['failed'])}")
        return lines

    def _mapping(self, document: Dict[str, Any], depth: int) -> List[str]:
        pad = self.INDENT * depth
        lines: List[str] = []
        for key, value in document.items():
            if key == "hasse":
                nodes = value["nodes"]
                lines.append(f"{pad}covers:")
                lines.extend(f"{pad}{self.INDENT}{nodes[i]} < {nodes[j]}" for i, j in value["edges"])
            elif isinstance(value, dict):
                lines.append(f"{pad}{key}:")
                lines.extend(self._mapping(value, depth + 1))
            elif isinstance(value, list) and any(isinstance(item, dict) for item in value):
                lines.append(f"{pad}{key}:")
                for item in value:
                    lines.append(f"{pad}{self.INDENT}-")
                    lines.extend(self._mapping(item, depth + 2))
            else:
                lines.append(f"{pad}{key}: {self._scalar(value)}")
        return lines

    @staticmethod
    def _scalar(value: Any) -> str:
        if isinstance(value, bool):
            return "yes" if value else "no"
        if value is None:
            return "-"
        if isinstance(value, list):
            return " ".join(TextDocumentEmitter._scalar(item) for item in value) or "(none)"
        return str(value)
