# Exact Sullivan-model engine for homogeneous spaces and two-sided homotopy quotients
