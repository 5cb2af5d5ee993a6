# Services package initialization

