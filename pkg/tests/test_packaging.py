import re
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

# pinned alongside pydantic, never imported directly
PYDANTIC_SUPPORT = {"pydantic_core", "annotated-types", "typing_extensions"}


def _requirement_names(path: Path):
    names = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith(("#", "-r")):
            names.append(re.split(r"[<>=!~\[ ]", line, maxsplit=1)[0])
    return names


def _runtime_source() -> str:
    files = [ROOT / "cli.py"]
    for package in ("algebra", "services", "config"):
        files.extend(sorted((ROOT / package).rglob("*.py")))
    return "\n".join(f.read_text(encoding="utf-8") for f in files)


def _is_imported(name: str, source: str) -> bool:
    module = name.replace("-", "_")
    return re.search(rf"^\s*(import|from) {re.escape(module)}\b", source, re.M) is not None


def test_every_pinned_runtime_requirement_is_imported():
    source = _runtime_source()
    unused = [name for name in _requirement_names(ROOT / "requirements.txt")
              if name not in PYDANTIC_SUPPORT and not _is_imported(name, source)]
    assert unused == []


def test_setup_and_requirements_declare_the_same_direct_dependencies():
    setup_text = (ROOT / "setup.py").read_text(encoding="utf-8")
    install = re.search(r"install_requires=\[(.*?)\]", setup_text, re.S).group(1)
    declared = {re.split(r"[<>=!~]", item, maxsplit=1)[0] for item in re.findall(r'"([^"]+)"', install)}
    pinned = set(_requirement_names(ROOT / "requirements.txt")) - PYDANTIC_SUPPORT
    assert declared == pinned == {"click", "pydantic", "tqdm"}
