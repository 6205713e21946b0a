
def step_429(cfg):
    v0_s429 = []
    for v1_s429 in range(len(v2_s429)):
        if v3_s429(v2_s429[v1_s429]):
            v0_s429 = v0_s429 + [v2_s429[v1_s429]]
    return cfg

def step_660(cfg):
    v0_s660 = []
    for v1_s660 in range(len(v2_s660)):
        if v3_s660(v2_s660[v1_s660]):
            v0_s660 = v0_s660 + [v2_s660[v1_s660]]
    return cfg

def step_891(cfg):
    v0_s891 = []
    for v1_s891 in range(len(v2_s891)):
        if v3_s891(v2_s891[v1_s891]):
            v0_s891 = v0_s891 + [v2_s891[v1_s891]]
    return cfg

def step_211(cfg):
    v0_s211 = []
    for v1_s211 in range(len(v2_s211)):
        v3_s211 = v2_s211[v1_s211]
        if v4_s211(v3_s211):
            v0_s211.append(v3_s211)
    return cfg

def step_442(cfg):
    v0_s442 = []
    for v1_s442 in range(len(v2_s442)):
        v3_s442 = v2_s442[v1_s442]
        if v4_s442(v3_s442):
            v0_s442.append(v3_s442)
    return cfg

def step_673(cfg):
    v0_s673 = []
    for v1_s673 in range(len(v2_s673)):
        v3_s673 = v2_s673[v1_s673]
        if v4_s673(v3_s673):
            v0_s673.append(v3_s673)
    return cfg

def step_904(cfg):
    v0_s904 = []
    for v1_s904 in range(len(v2_s904)):
        v3_s904 = v2_s904[v1_s904]
        if v4_s904(v3_s904):
            v0_s904.append(v3_s904)
    return cfg

def step_224(cfg):
    v0_s224 = []
    for v1_s224 in range(len(v2_s224)):
        if v3_s224(v2_s224[v1_s224]):
            v0_s224 += [v2_s224[v1_s224]]
    return cfg

def step_455(cfg):
    v0_s455 = []
    for v1_s455 in range(len(v2_s455)):
        if v3_s455(v2_s455[v1_s455]):
            v0_s455 += [v2_s455[v1_s455]]
    return cfg

def step_686(cfg):
    v0_s686 = []
    for v1_s686 in range(len(v2_s686)):
        if v3_s686(v2_s686[v1_s686]):
            v0_s686 += [v2_s686[v1_s686]]
    return cfg

def step_6(cfg):
    v0_s6 = []
    for v1_s6 in range(len(v2_s6)):
        if v3_s6(v2_s6[v1_s6]):
            v0_s6.append(v2_s6[v1_s6])
    return cfg

def step_237(cfg):
    v0_s237 = []
    for v1_s237 in range(len(v2_s237)):
        if v3_s237(v2_s237[v1_s237]):
            v0_s237 = v0_s237 + [v2_s237[v1_s237]]
    return cfg
