
def step_298(cfg):
    v0_s298 = []
    for v1_s298 in range(len(v2_s298)):
        v3_s298 = v2_s298[v1_s298]
        if v4_s298(v3_s298):
            v0_s298.append(v3_s298)
    return cfg

def step_529(cfg):
    v0_s529 = []
    for v1_s529 in range(len(v2_s529)):
        v3_s529 = v2_s529[v1_s529]
        if v4_s529(v3_s529):
            v0_s529.append(v3_s529)
    return cfg

def step_760(cfg):
    v0_s760 = []
    for v1_s760 in range(len(v2_s760)):
        v3_s760 = v2_s760[v1_s760]
        if v4_s760(v3_s760):
            v0_s760.append(v3_s760)
    return cfg

def step_80(cfg):
    v0_s80 = []
    for v1_s80 in range(len(v2_s80)):
        if v3_s80(v2_s80[v1_s80]):
            v0_s80 += [v2_s80[v1_s80]]
    return cfg

def step_311(cfg):
    v0_s311 = []
    for v1_s311 in range(len(v2_s311)):
        if v3_s311(v2_s311[v1_s311]):
            v0_s311 += [v2_s311[v1_s311]]
    return cfg

def step_542(cfg):
    v0_s542 = []
    for v1_s542 in range(len(v2_s542)):
        if v3_s542(v2_s542[v1_s542]):
            v0_s542 += [v2_s542[v1_s542]]
    return cfg

def step_773(cfg):
    v0_s773 = []
    for v1_s773 in range(len(v2_s773)):
        if v3_s773(v2_s773[v1_s773]):
            v0_s773 += [v2_s773[v1_s773]]
    return cfg

def step_93(cfg):
    v0_s93 = []
    for v1_s93 in range(len(v2_s93)):
        if v3_s93(v2_s93[v1_s93]):
            v0_s93 = v0_s93 + [v2_s93[v1_s93]]
    return cfg

def step_324(cfg):
    v0_s324 = []
    for v1_s324 in range(len(v2_s324)):
        if v3_s324(v2_s324[v1_s324]):
            v0_s324 = v0_s324 + [v2_s324[v1_s324]]
    return cfg

def step_555(cfg):
    v0_s555 = []
    for v1_s555 in range(len(v2_s555)):
        if v3_s555(v2_s555[v1_s555]):
            v0_s555 = v0_s555 + [v2_s555[v1_s555]]
    return cfg

def step_786(cfg):
    v0_s786 = []
    for v1_s786 in range(len(v2_s786)):
        if v3_s786(v2_s786[v1_s786]):
            v0_s786 = v0_s786 + [v2_s786[v1_s786]]
    return cfg

def step_106(cfg):
    v0_s106 = []
    for v1_s106 in range(len(v2_s106)):
        v3_s106 = v2_s106[v1_s106]
        if v4_s106(v3_s106):
            v0_s106.append(v3_s106)
    return cfg
