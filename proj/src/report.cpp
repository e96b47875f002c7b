namespace bartor {}
