# Diagrams package initialization
