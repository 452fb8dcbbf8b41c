"""Configuration validation.

Validates configuration values and structure.
"""

from typing import Any

from heavysift.config.defaults import OUTPUT_FORMATS


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def validate_config(config: dict[str, Any]) -> tuple[bool, list[str]]:
    """Validate configuration structure and values.

    Args:
        config: Configuration dictionary to validate

    Returns:
        Tuple of (is_valid, list_of_errors)
    """
    errors: list[str] = []

    tolerance = config.get('numeric', {}).get('tolerance')
    if not isinstance(tolerance, int | float) or isinstance(tolerance, bool) or tolerance < 0:
        errors.append(f'numeric.tolerance must be a nonnegative number, got {tolerance!r}')

    output_format = config.get('output', {}).get('default_format')
    if output_format is not None and output_format not in OUTPUT_FORMATS:
        errors.append(f'output.default_format must be one of {", ".join(OUTPUT_FORMATS)}, got {output_format!r}')
    use_colors = config.get('output', {}).get('use_colors')
    if not isinstance(use_colors, bool):
        errors.append(f'output.use_colors must be true or false, got {use_colors!r}')

    finite = config.get('finite', {})
    for key, minimum in (('seed', 0), ('atoms', 1), ('count', 0), ('horizon', 1)):
        value = finite.get(key)
        if not _is_int(value) or value < minimum:
            errors.append(f'finite.{key} must be an integer >= {minimum}, got {value!r}')
    f_min, f_max = finite.get('f_min'), finite.get('f_max')
    if not (_is_int(f_min) and _is_int(f_max)) or not f_min <= 0 <= f_max:
        errors.append(f'finite.f_min and finite.f_max must be integers with f_min <= 0 <= f_max, got {f_min!r}, {f_max!r}')

    search = config.get('search', {})
    for key in ('max_steps', 'grid'):
        value = search.get(key)
        if not _is_int(value) or value < 1:
            errors.append(f'search.{key} must be a positive integer, got {value!r}')

    multiples = config.get('multiples', {})
    for key in ('k', 'q_max'):
        value = multiples.get(key)
        if not _is_int(value) or value < 2:
            errors.append(f'multiples.{key} must be an integer >= 2, got {value!r}')

    morse = config.get('morse', {})
    for key in ('length', 'horizon', 'positions'):
        value = morse.get(key)
        if not _is_int(value) or value < 1:
            errors.append(f'morse.{key} must be a positive integer, got {value!r}')
    word = morse.get('word')
    if not isinstance(word, str) or not word or set(word) - {'0', '1'}:
        errors.append(f'morse.word must be a nonempty bit string, got {word!r}')

    return not errors, errors
