# Utils package initialization

