from dataclasses import dataclass


@dataclass(frozen=True)
class GmparkTheme:
    """Colour palette applied across CLI tables and messages."""

    header_style: str
    label_style: str
    vector_style: str
    forest_style: str
    polynomial_style: str
    count_style: str
    pass_style: str
    fail_style: str
    info_style: str
    warning_style: str
    accent_style: str
    row_styles: tuple[str, ...] | None = None


THEMES: dict[str, GmparkTheme] = {
    "default": GmparkTheme(
        header_style="bold cyan",
        label_style="white",
        vector_style="white",
        forest_style="white",
        polynomial_style="green",
        count_style="yellow",
        pass_style="bold green",
        fail_style="bold red",
        info_style="bold white",
        warning_style="yellow",
        accent_style="bold",
        row_styles=None,
    ),
    "contrast": GmparkTheme(
        header_style="bold magenta",
        label_style="white",
        vector_style="bright_white",
        forest_style="bright_white",
        polynomial_style="bright_cyan",
        count_style="bright_yellow",
        pass_style="bold bright_green",
        fail_style="bold bright_red",
        info_style="bold bright_white",
        warning_style="bright_yellow",
        accent_style="bold magenta",
        row_styles=("none", "dim"),
    ),
    "mono": GmparkTheme(
        header_style="bold white",
        label_style="white",
        vector_style="white",
        forest_style="white",
        polynomial_style="white",
        count_style="white",
        pass_style="bold white",
        fail_style="bold white",
        info_style="bold white",
        warning_style="white",
        accent_style="bold white",
        row_styles=None,
    ),
    "monokai": GmparkTheme(
        header_style="bold #66D9EF",
        label_style="#F8F8F2",
        vector_style="#E6DB74",
        forest_style="#66D9EF",
        polynomial_style="#A6E22E",
        count_style="#FD971F",
        pass_style="bold #A6E22E",
        fail_style="bold #F92672",
        info_style="#F8F8F2",
        warning_style="#F92672",
        accent_style="bold #F92672",
        row_styles=None,
    ),
    "dracula": GmparkTheme(
        header_style="bold #BD93F9",
        label_style="#F8F8F2",
        vector_style="#F1FA8C",
        forest_style="#8BE9FD",
        polynomial_style="#50FA7B",
        count_style="#FFB86C",
        pass_style="bold #50FA7B",
        fail_style="bold #FF5555",
        info_style="#6272A4",
        warning_style="#FF5555",
        accent_style="bold #FF79C6",
        row_styles=None,
    ),
}

AVAILABLE_THEMES = tuple(sorted(THEMES))
