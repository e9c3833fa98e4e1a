# Vertex subsets are packed into one machine word
ENCODING_LIMIT = 63

# Darts are numbered 2 * edge_id + side
SIDE_A = 0
SIDE_B = 1
SIDE_NAMES = ('a', 'b')
