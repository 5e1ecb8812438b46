# Verificación acotada de las identidades
