import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidword.errors import AmbientMismatchError, LetterRangeError, ParseError
from braidword.words import (
    FGLetter,
    FGWord,
    concat,
    conjugate_shape,
    format_fgword,
    free_reduce,
    invert,
    is_reduced,
    parse_fgword,
    substitute,
)
from tests.strategies import fg_words


@pytest.mark.parametrize(
    "letters, n, expected",
    [
        ((), 3, ()),
        ((1, -1), 2, ()),
        ((1, 2, -2, -1, 3), 3, (3,)),
        ((2, 1, -1, -2, 2), 2, (2,)),
        ((3, 2, -3), 3, (3, 2, -3)),
        ((1, 1, -1, 2), 2, (1, 2)),
    ],
)
def test_free_reduce_goldens(letters, n, expected):
    assert free_reduce(FGWord(letters, n)).tietze == expected


@given(fg_words())
def test_free_reduce_is_reduced_and_idempotent(w):
    reduced = free_reduce(w)
    assert is_reduced(reduced)
    assert free_reduce(reduced) == reduced
    assert (len(w) - len(reduced)) % 2 == 0


@given(fg_words())
def test_word_times_inverse_reduces_to_identity(w):
    assert free_reduce(concat(w, invert(w))).is_identity()
    assert invert(invert(w)) == w


@given(fg_words(), st.data())
def test_substitute_is_a_homomorphism(w, data):
    other = data.draw(fg_words(min_n=w.n, max_n=w.n))
    images = [data.draw(fg_words(min_n=w.n, max_n=w.n, max_length=4)) for _ in range(w.n)]
    left = substitute(concat(w, other), images)
    right = free_reduce(concat(substitute(w, images), substitute(other, images)))
    assert left == right


@given(fg_words())
def test_substitute_standard_images_reduces(w):
    images = [FGWord.generator(k, w.n) for k in range(1, w.n + 1)]
    assert substitute(w, images) == free_reduce(w)


def test_substitute_checks_arity():
    with pytest.raises(AmbientMismatchError):
        substitute(FGWord((1,), 2), [FGWord((1,), 2)])
    with pytest.raises(AmbientMismatchError):
        substitute(FGWord((1,), 2), [FGWord((1,), 2), FGWord((1,), 3)])


def test_conjugate_shape():
    shape = conjugate_shape(FGWord((3, 2, -3), 3))
    assert shape.core == FGLetter(2)
    assert shape.q.tietze == (-3,)

    assert conjugate_shape(FGWord((2,), 2)).q.is_identity()
    assert conjugate_shape(FGWord((1, 2), 2)) is None
    assert conjugate_shape(FGWord((), 2)) is None
    assert conjugate_shape(FGWord((1, 2, 1), 2)) is None
    # negative cores are reported as found
    assert conjugate_shape(FGWord((-2,), 2)).core == FGLetter(2, -1)


@pytest.mark.parametrize(
    "text, n, expected",
    [
        ("+3 +2 -3", 3, (3, 2, -3)),
        ("3 2 -3", 3, (3, 2, -3)),
        ("", 2, ()),
        ("  -1   +1 ", 1, (-1, 1)),
    ],
)
def test_parse_fgword(text, n, expected):
    assert parse_fgword(text, n).tietze == expected


@pytest.mark.parametrize(
    "text, n, error",
    [
        ("0", 3, ParseError),
        ("+x", 3, ParseError),
        ("4", 3, LetterRangeError),
        ("-4", 3, LetterRangeError),
    ],
)
def test_parse_fgword_errors(text, n, error):
    with pytest.raises(error):
        parse_fgword(text, n)


def test_format_fgword_writes_explicit_signs():
    assert format_fgword(FGWord((3, 2, -3), 3)) == "+3 +2 -3"
    assert format_fgword(FGWord.identity(4)) == ""
    assert str(FGLetter(2, -1)) == "-2"


def test_word_validation():
    with pytest.raises(LetterRangeError):
        FGWord((4,), 3)
    with pytest.raises(LetterRangeError):
        FGWord((0,), 3)
    with pytest.raises(AmbientMismatchError):
        FGWord((), 0)
    with pytest.raises(AmbientMismatchError):
        concat(FGWord((1,), 2), FGWord((1,), 3))


def test_letter_views():
    w = FGWord((1, -2), 2)
    assert w.letters == (FGLetter(1), FGLetter(2, -1))
    assert w[1].inverse() == FGLetter(2)
    assert FGWord.from_letters(w.letters, 2) == w
