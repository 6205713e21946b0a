
def step_245(cfg):
    v0_s245 = []
    for v1_s245 in range(len(v2_s245)):
        if v3_s245(v2_s245[v1_s245]):
            v0_s245 += [v2_s245[v1_s245]]
    return cfg

def step_476(cfg):
    v0_s476 = []
    for v1_s476 in range(len(v2_s476)):
        if v3_s476(v2_s476[v1_s476]):
            v0_s476 += [v2_s476[v1_s476]]
    return cfg

def step_707(cfg):
    v0_s707 = []
    for v1_s707 in range(len(v2_s707)):
        if v3_s707(v2_s707[v1_s707]):
            v0_s707 += [v2_s707[v1_s707]]
    return cfg

def step_27(cfg):
    v0_s27 = []
    for v1_s27 in range(len(v2_s27)):
        if v3_s27(v2_s27[v1_s27]):
            v0_s27 = v0_s27 + [v2_s27[v1_s27]]
    return cfg

def step_258(cfg):
    v0_s258 = []
    for v1_s258 in range(len(v2_s258)):
        if v3_s258(v2_s258[v1_s258]):
            v0_s258 = v0_s258 + [v2_s258[v1_s258]]
    return cfg

def step_489(cfg):
    v0_s489 = []
    for v1_s489 in range(len(v2_s489)):
        if v3_s489(v2_s489[v1_s489]):
            v0_s489 = v0_s489 + [v2_s489[v1_s489]]
    return cfg

def step_720(cfg):
    v0_s720 = []
    for v1_s720 in range(len(v2_s720)):
        if v3_s720(v2_s720[v1_s720]):
            v0_s720 = v0_s720 + [v2_s720[v1_s720]]
    return cfg

def step_40(cfg):
    v0_s40 = []
    for v1_s40 in range(len(v2_s40)):
        v3_s40 = v2_s40[v1_s40]
        if v4_s40(v3_s40):
            v0_s40.append(v3_s40)
    return cfg

def step_271(cfg):
    v0_s271 = []
    for v1_s271 in range(len(v2_s271)):
        v3_s271 = v2_s271[v1_s271]
        if v4_s271(v3_s271):
            v0_s271.append(v3_s271)
    return cfg

def step_502(cfg):
    v0_s502 = []
    for v1_s502 in range(len(v2_s502)):
        v3_s502 = v2_s502[v1_s502]
        if v4_s502(v3_s502):
            v0_s502.append(v3_s502)
    return cfg

def step_733(cfg):
    v0_s733 = []
    for v1_s733 in range(len(v2_s733)):
        v3_s733 = v2_s733[v1_s733]
        if v4_s733(v3_s733):
            v0_s733.append(v3_s733)
    return cfg

def step_53(cfg):
    v0_s53 = []
    for v1_s53 in range(len(v2_s53)):
        if v3_s53(v2_s53[v1_s53]):
            v0_s53 += [v2_s53[v1_s53]]
    return cfg
