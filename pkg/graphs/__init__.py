"""Package initialization file"""

from .models import Graph, VertexLabel, LabelTag, FamilyTag, build_graph, line_graph, closed_neighborhood
from .cliques import clique_number
from .coloring import Coloring, ValidationReport
from .families import Family, FamilyInstance, generate, generate_line

__all__ = [
    'Graph',
    'VertexLabel',
    'LabelTag',
    'FamilyTag',
    'build_graph',
    'line_graph',
    'closed_neighborhood',
    'clique_number',
    'Coloring',
    'ValidationReport',
    'Family',
    'FamilyInstance',
    'generate',
    'generate_line'
]
