import importlib

import pytest

from src.tools.diagram_io import format_diagram, parse_diagram
from src.tools.file_manager import read_file_safe, write_file_safe
from src.topology.contfrac import Slope


def test_tools_modules_import():
    importlib.import_module("src.tools.file_manager")
    importlib.import_module("src.tools.diagram_io")
    importlib.import_module("src.tools.smith_normal_form")


def test_write_then_read(tmp_path):
    target = tmp_path / "sub" / "out.txt"
    written = write_file_safe(str(target), "a\nb\n")
    assert written == str(target.resolve())
    assert read_file_safe(str(target)) == "a\nb\n"


def test_read_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        read_file_safe(str(tmp_path / "absent.txt"))


def test_write_error_names_the_path(tmp_path):
    blocker = tmp_path / "fichier"
    blocker.write_text("x", encoding="utf-8")
    target = blocker / "out.txt"
    with pytest.raises(IOError) as exc:
        write_file_safe(str(target), "contenu")
    assert str(target) in str(exc.value)


def test_format_diagram_layout():
    text = format_diagram((Slope(2, 1), Slope.infinity()), ((0, 1), (1, 0)), ["en-tête"])
    assert text == "# en-tête\n2\n1 2/1 lk: 0 1\n2 1/0 lk: 1 0\n"


def test_parse_diagram_reads_back():
    coefficients, linking = parse_diagram("# c\n2\n1 -1/3 lk: 0 2\n2 inf lk: 2 0\n")
    assert coefficients == (Slope(-1, 3), Slope.infinity())
    assert linking == ((0, 2), (2, 0))


@pytest.mark.parametrize("text", [
    "",
    "deux\n",
    "2\n1 1/1 lk: 0 1\n",
    "1\n2 1/1 lk: 0\n",
    "1\n1 1/1 0\n",
    "1\n1 1/1 lk: 0 0\n",
])
def test_parse_diagram_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_diagram(text)
