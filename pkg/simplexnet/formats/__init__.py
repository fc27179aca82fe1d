"""Plain-text and CSV file formats for lattices, simplices, networks, instances and states."""
