import pytest

from lindec.utils_v1.text_utils import text_to_md5


@pytest.mark.parametrize(
    "text, expected",
    [
        ("", "d41d8cd98f00b204e9800998ecf8427e"),
        ("abc", "900150983cd24fb0d6963f7d28e17f72"),
    ],
)
def test_text_to_md5(text: str, expected: str):
    assert text_to_md5(text) == expected
