namespace sscert {}
