#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Writes one automodule stub per threestage module below apidocs/api/

Run before sphinx-build whenever modules are added or removed.

"""

from pathlib import Path

HERE_PATH = Path(__file__).resolve().parent
ROOT_PATH = HERE_PATH.parent
PACKAGE = "threestage"
API_PATH = HERE_PATH / "api"

# __main__ exits the interpreter on import
SKIPPED = {"__main__.py", "__pycache__", "test"}

MODULE_TEMPLATE = """{module}
{underline}

.. automodule:: {module}
    :members:
    :undoc-members:
    :show-inheritance:
"""

INDEX_TEMPLATE = """{title}
{underline}

.. toctree::
    :maxdepth: 1

{entries}
"""


def write_module_stub(target_dir: Path, name: str, module: str) -> str:
    """Writes the stub of a dotted module name to name.rst"""

    text = MODULE_TEMPLATE.format(module=module, underline="=" * len(module))
    (target_dir / f"{name}.rst").write_text(text, encoding="utf-8")
    return f"{name}.rst"


def walk_package(parts: tuple) -> None:
    """Writes stubs and an index for a package and its subpackages"""

    source_dir = ROOT_PATH.joinpath(PACKAGE, *parts)
    target_dir = API_PATH.joinpath(*parts)
    target_dir.mkdir(parents=True, exist_ok=True)

    dotted = ".".join((PACKAGE,) + parts)
    entries = []
    for path in sorted(source_dir.iterdir(), key=lambda p: p.name.lower()):
        if path.name in SKIPPED:
            continue
        if path.is_dir() and (path / "__init__.py").exists():
            walk_package(parts + (path.name,))
            entries.append(f"{path.name}/index.rst")
        elif path.suffix == ".py":
            if path.name == "__init__.py":
                if not path.read_text(encoding="utf-8").strip():
                    continue
                module = dotted
            else:
                module = f"{dotted}.{path.stem}"
            entries.append(write_module_stub(target_dir, path.stem, module))

    title = dotted if parts else "API"
    text = INDEX_TEMPLATE.format(
        title=title, underline="=" * len(title),
        entries="\n".join(f"    {entry}" for entry in entries))
    (target_dir / "index.rst").write_text(text, encoding="utf-8")


if __name__ == '__main__':
    walk_package(())
