"""JSON input/output and schema checking."""

from .documents import (category_from_doc, category_to_doc, check_schema, double_category_from_doc,
                        double_category_to_doc, dumps, load_category, load_double_category,
                        load_schema, load_two_category, load_two_functor, read_json,
                        two_category_from_doc, two_category_to_doc, two_functor_from_doc,
                        two_functor_to_doc)

__all__ = [
    "category_from_doc", "category_to_doc", "check_schema", "double_category_from_doc",
    "double_category_to_doc", "dumps", "load_category", "load_double_category", "load_schema",
    "load_two_category", "load_two_functor", "read_json", "two_category_from_doc",
    "two_category_to_doc", "two_functor_from_doc", "two_functor_to_doc",
]
