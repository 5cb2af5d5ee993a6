# Skeinlab package initialization
