"""Anagram-free graph colouring: verification, constructions and the
adversaries that defeat colourings with too few colours."""

from .errors import (BudgetExceededError, EnumerationOverflowError,
                     InvalidInputError, PreconditionError)
from .words import (ColorString, EvenSubstringWitness, find_abelian_square,
                    find_even_substring, generate_asf_word, is_anagram, is_even,
                    parity_vector, split_even_pairs)
from .graphs import (CliqueChainMeta, Graph, LadderMeta, PathDecomposition,
                     build_clique_chain, build_ladder, build_path_graph,
                     clique_chain_decomposition, enumerate_simple_paths,
                     ladder_decomposition, validate_decomposition)
from .colouring import (Colouring, Status, Verdict, colour_path_asf, dnc_colour,
                        verify_anagram_free)
from .adversary import (AnagramPath, IntervalWitness, bichromatic_matching,
                        find_anagram_clique_chain, find_anagram_ladder,
                        find_even_interval, red_blue_label,
                        solve_capacitated_assignment)

__version__ = "0.1.0"
