# Un módulo por subcomando
