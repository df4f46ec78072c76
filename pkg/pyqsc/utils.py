from typing import Dict, Tuple


def parse_int_list(text: str) -> Tuple[int, ...]:
    """
    >>> parse_int_list("0, 1,2")
    (0, 1, 2)
    >>> parse_int_list("")
    ()
    """
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(token) for token in text.split(","))
    except ValueError:
        raise ValueError(f"'{text}' is not a comma separated list of integers") from None


def parse_code_description(text: str) -> Dict[str, Tuple[int, ...]]:
    """Parses a code description like "classes=0,1,drop=3"

    Tokens without '=' extend the list of the last key seen.

    >>> parse_code_description("classes=0,1,drop=3")
    {'classes': (0, 1), 'drop': (3,)}
    >>> parse_code_description("classes=1")
    {'classes': (1,), 'drop': ()}
    """
    parsed: Dict[str, list] = {"classes": [], "drop": []}
    key = None
    for token in (t.strip() for t in text.split(",")):
        if not token:
            continue
        if "=" in token:
            key, token = (part.strip() for part in token.split("=", 1))
            if key not in parsed:
                raise ValueError(f"Unknown key '{key}' in code description '{text}'")
            if not token:
                continue
        if key is None:
            raise ValueError(f"'{text}' should start with classes= or drop=")
        try:
            parsed[key].append(int(token))
        except ValueError:
            raise ValueError(f"'{token}' is not an integer in '{text}'") from None
    if not parsed["classes"]:
        raise ValueError(f"'{text}' does not name any class")
    return {key: tuple(values) for key, values in parsed.items()}
