namespace bidyn{}
