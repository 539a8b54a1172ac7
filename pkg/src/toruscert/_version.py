ENGINE_NAME = "toruscert"
ENGINE_VERSION = "0.1.0"
