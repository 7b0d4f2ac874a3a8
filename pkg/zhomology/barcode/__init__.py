from zhomology.barcode.diagram import (IntegerBar, ExtensionLink,  # noqa: F401
                                       BarcodeDiagram, build_barcode,
                                       build_field_barcode)
from zhomology.barcode.render import format_interval, render_text  # noqa: F401
