
def step_376(cfg):
    v0_s376 = []
    for v1_s376 in range(len(v2_s376)):
        v3_s376 = v2_s376[v1_s376]
        if v4_s376(v3_s376):
            v0_s376.append(v3_s376)
    return cfg

def step_607(cfg):
    v0_s607 = []
    for v1_s607 in range(len(v2_s607)):
        v3_s607 = v2_s607[v1_s607]
        if v4_s607(v3_s607):
            v0_s607.append(v3_s607)
    return cfg

def step_838(cfg):
    v0_s838 = []
    for v1_s838 in range(len(v2_s838)):
        v3_s838 = v2_s838[v1_s838]
        if v4_s838(v3_s838):
            v0_s838.append(v3_s838)
    return cfg

def step_158(cfg):
    v0_s158 = []
    for v1_s158 in range(len(v2_s158)):
        if v3_s158(v2_s158[v1_s158]):
            v0_s158 += [v2_s158[v1_s158]]
    return cfg

def step_389(cfg):
    v0_s389 = []
    for v1_s389 in range(len(v2_s389)):
        if v3_s389(v2_s389[v1_s389]):
            v0_s389 += [v2_s389[v1_s389]]
    return cfg

def step_620(cfg):
    v0_s620 = []
    for v1_s620 in range(len(v2_s620)):
        if v3_s620(v2_s620[v1_s620]):
            v0_s620 += [v2_s620[v1_s620]]
    return cfg

def step_851(cfg):
    v0_s851 = []
    for v1_s851 in range(len(v2_s851)):
        if v3_s851(v2_s851[v1_s851]):
            v0_s851 += [v2_s851[v1_s851]]
    return cfg

def step_171(cfg):
    v0_s171 = []
    for v1_s171 in range(len(v2_s171)):
        if v3_s171(v2_s171[v1_s171]):
            v0_s171 = v0_s171 + [v2_s171[v1_s171]]
    return cfg

def step_402(cfg):
    v0_s402 = []
    for v1_s402 in range(len(v2_s402)):
        if v3_s402(v2_s402[v1_s402]):
            v0_s402 = v0_s402 + [v2_s402[v1_s402]]
    return cfg

def step_633(cfg):
    v0_s633 = []
    for v1_s633 in range(len(v2_s633)):
        if v3_s633(v2_s633[v1_s633]):
            v0_s633 = v0_s633 + [v2_s633[v1_s633]]
    return cfg

def step_864(cfg):
    v0_s864 = []
    for v1_s864 in range(len(v2_s864)):
        if v3_s864(v2_s864[v1_s864]):
            v0_s864 = v0_s864 + [v2_s864[v1_s864]]
    return cfg

def step_184(cfg):
    v0_s184 = []
    for v1_s184 in range(len(v2_s184)):
        v3_s184 = v2_s184[v1_s184]
        if v4_s184(v3_s184):
            v0_s184.append(v3_s184)
    return cfg
