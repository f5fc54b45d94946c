# stairtab package
