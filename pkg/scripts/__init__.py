# Scripts de utilidad: exportación de las figuras a DOT y JSON
